"""Batch, two-basis streaming, and single-basis streaming DMD."""

from .batch import BatchDmdResult, fit_batch, full_operator
from .esdmd import (
    EfficientStreamingDMD,
    EsdmdState,
    esdmd_init,
    load_state,
    reduced_operator,
    save_state,
    update_basis,
)
from .numerics import eig_general, orthonormal_columns, pinv_psd, sym_eig_descending
from .sdmd import SdmdState, StreamingDMD, sdmd_init, sdmd_operator, sdmd_update
from .snapshots import SnapshotPair, SnapshotStream, batch_matrices, stream_from_trajectory
from .spectrum import Spectrum, dynamic_spectrum, match_spectra
from .systems import (
    KuramotoConfig,
    OscillatoryConfig,
    kuramoto_trajectory,
    oscillatory_trajectory,
)

__version__ = "0.1.0"
