"""Coupled-map-lattice image cipher and its security-analysis battery.

Chaotic tangent/cotangent maps drive a two-site coupled lattice whose
quantized trajectory masks the pixels of a grayscale image.  The package
ships the cipher in two modes (the degenerate two-mask construction and
the invertible repaired stream cipher), the measurement suite used to
evaluate it (histogram, adjacent-pixel correlation, NPCR/UACI, key-space
accounting), a PGM codec, and a CLI tying it all together.

Hot kernels run on a compiled extension when it is built, with an
equivalent pure-Python fallback; see `cmlcipher.backend_name`.
"""

from ._backend import BACKEND as backend_name, available_backends
from .analysis import (
    CorrelationReport,
    DegenerateVarianceError,
    DiffReport,
    KeySpaceReport,
    adjacent_correlation,
    diff_report,
    chi_square_uniform,
    histogram,
    keyspace_report,
    mean_intensity,
    npcr,
    uaci,
)
from .cipher import (
    Ciphertext,
    Image,
    LiteralModeError,
    WorkBuffers,
    decrypt,
    decrypt_repaired,
    encrypt,
    encrypt_literal,
    encrypt_repaired,
    flatten,
    unflatten,
)
from .keyfile import KeyFileError, generate_key, parse_key, read_key, serialize_key, write_key
from .keystream import (
    CipherKey,
    CmlState,
    MaskPair,
    cml_step,
    derive_epsilon,
    init_state,
    keystream,
    mask_arrays,
    quantize_mask,
)
from .maps import (
    LogisticParams,
    MapParams,
    chebyshev_t,
    chebyshev_u,
    conjugacy_h,
    conjugacy_h_inv,
    f1,
    f2,
    logistic_step,
    phi1,
    phi2,
)
from .pgm import PgmError, read_pgm, write_pgm

__version__ = "1.0.0"
