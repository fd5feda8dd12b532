"""Lightweight video frame interpolation on block-compressed images.

The pipeline compresses both input frames with a finetunable linear block
codec, estimates bidirectional optical flow on the compressed representation
with a weight-shared multi-scale network, warps the inputs forward (softmax
splatting) and backward (bilinear sampling) to the target time, and fuses the
warped candidates with a learned per-pixel weighting.
"""

__version__ = "0.1.0"

from .fldr import (
    CompressedImage,
    ProjectionBasis,
    init_basis_from_image,
    normalize_for_network,
    project,
    reconstruct,
)
from .flownet import (
    FlowNet,
    FlowPyramid,
    approximate_backward_flow,
    build_flow_network,
    estimate_flow_pyramid,
    scale_flow_to_time,
    upsample_flow,
)
from .fusion import OcclusionNet, build_occlusion_network, estimate_weight_map, fuse
from .warp import ImportanceMap, backward_warp, compute_importance, forward_splat_softmax
from .checkpoint import InterpolationModel, ModelCheckpoint, load_checkpoint, save_checkpoint
from .config import TrainConfig
from .pipeline import InterpolationRequest, interpolate_at, interpolate_pair, interpolate_sequence
