"""hazelab: model-based single image dehazing toolkit.

Haze synthesis under the atmospheric scattering model, quadtree airlight
estimation, dark-direct-attenuation + haze-line-averaging transmission
estimation, dual-scale Laplacian-pyramid restoration, quality metrics, and
a linearized training-dynamics simulator for neural-augmentation studies.
"""

from .airlight import estimate_airlight, find_airlight_region, region_score
from .dynamics import (DynamicsConfig, TrajectoryRecord, closed_form_residual,
                       compare_augmented_vs_datadriven, euler_trajectory,
                       theta_diagonal, theta_identity, theta_random_psd,
                       write_trajectories_csv)
from .errors import InvalidInputError, UnstableStepError
from .kernels import BACKEND, nearest_direction, windowed_min
from .pyramid import TwoLevelPyramid, blur, build_pyramid, collapse_pyramid
from .quality import (extreme_channel, extreme_mse_vs_haze, loss_cnn,
                      loss_dual_recon, loss_extreme, loss_gradient, psnr, ssim)
from .restoration import (AugmentedEstimate, dual_scale_dehaze, phi,
                          single_scale_dehaze)
from .synthesis import (SynthesisParams, generate_depth, invert_koschmieder,
                        koschmieder_forward, sample_protocol_params,
                        transmission_from_depth)
from .transmission import (HazeLinePartition, build_haze_lines, ddap_init,
                           estimate_transmission, fibonacci_directions,
                           hla_refine)

__version__ = "0.1.0"

__all__ = [
    "AugmentedEstimate",
    "BACKEND",
    "DynamicsConfig",
    "HazeLinePartition",
    "InvalidInputError",
    "SynthesisParams",
    "TrajectoryRecord",
    "TwoLevelPyramid",
    "UnstableStepError",
    "blur",
    "build_haze_lines",
    "build_pyramid",
    "closed_form_residual",
    "collapse_pyramid",
    "compare_augmented_vs_datadriven",
    "ddap_init",
    "dual_scale_dehaze",
    "estimate_airlight",
    "estimate_transmission",
    "euler_trajectory",
    "extreme_channel",
    "extreme_mse_vs_haze",
    "fibonacci_directions",
    "find_airlight_region",
    "generate_depth",
    "hla_refine",
    "invert_koschmieder",
    "koschmieder_forward",
    "loss_cnn",
    "loss_dual_recon",
    "loss_extreme",
    "loss_gradient",
    "nearest_direction",
    "phi",
    "psnr",
    "region_score",
    "sample_protocol_params",
    "single_scale_dehaze",
    "ssim",
    "theta_diagonal",
    "theta_identity",
    "theta_random_psd",
    "transmission_from_depth",
    "windowed_min",
    "write_trajectories_csv",
]
