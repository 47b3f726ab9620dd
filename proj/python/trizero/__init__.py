"""Binary cyclic codes with three zeros: exact tooling.

Re-exports the native module's operations: field arithmetic over GF(2^m),
code construction and relatives (extend/augment/shorten/dual), exact weight
distributions, closed-form tables, counting quantities, and combinatorial
design verification.
"""

try:  # installed layout: the native module lives inside the package
    from . import _trizero as _native
except ImportError:  # build-tree layout: the native module is top-level
    import _trizero as _native

_EXPORTS = [
    "BinaryCode",
    "Field",
    "augment",
    "build_ce",
    "build_extended_augmented",
    "combined_n_t4",
    "cubic_sum_c",
    "cubic_sum_g",
    "dual",
    "dual_low_weight_report",
    "extend",
    "kloosterman",
    "n_of_triple",
    "nbar_of_quad",
    "predicted_dual_low_weights",
    "predicted_lambda_dual8",
    "predicted_lambda_min_weight",
    "predicted_wd_base",
    "predicted_wd_extended",
    "predicted_wd_shortened",
    "puncture",
    "shorten",
    "verify_design",
    "weight_distribution",
]

for _name in _EXPORTS:
    globals()[_name] = getattr(_native, _name)

__all__ = list(_EXPORTS)
