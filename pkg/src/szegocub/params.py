"""Validation helpers for pole-type parameter lists.

Parameter families live strictly inside the unit disk and must be closed
under complex conjugation so that kernel sums and denominator products
stay real.
"""

from .errors import ConfigurationError

CONJUGATE_TOL = 1e-12


def conjugate_closed_params(values, label, tol=CONJUGATE_TOL):
    """Coerce to a tuple of complex, checking |a| < 1 and conjugate closure.

    Non-real entries are greedily matched to a conjugate partner within
    `tol`; an unmatched entry raises ConfigurationError.  Entries with
    |Im a| <= tol count as real.
    """
    vals = tuple(complex(v) for v in values)
    for v in vals:
        if abs(v) >= 1.0:
            raise ConfigurationError(
                f"{label} parameter {v} must satisfy |a| < 1"
            )
    pending = [i for i, v in enumerate(vals) if abs(v.imag) > tol]
    matched = set()
    for i in pending:
        if i in matched:
            continue
        partner = None
        for j in pending:
            if j == i or j in matched:
                continue
            if abs(vals[i] - vals[j].conjugate()) <= tol:
                partner = j
                break
        if partner is None:
            raise ConfigurationError(
                f"{label} parameter {vals[i]} has no conjugate partner "
                f"within {tol:g}"
            )
        matched.add(i)
        matched.add(partner)
    return vals


def split_conjugate_params(values, tol=CONJUGATE_TOL):
    """Split a conjugate-closed list into (real parts list, one pair member each).

    Returns (reals, pair_representatives); each conjugate pair contributes a
    single representative with positive imaginary part.
    """
    vals = [complex(v) for v in values]
    reals = []
    pairs = []
    used = [False] * len(vals)
    for i, v in enumerate(vals):
        if used[i]:
            continue
        if abs(v.imag) <= tol:
            reals.append(v.real)
            used[i] = True
            continue
        for j in range(i + 1, len(vals)):
            if not used[j] and abs(v - vals[j].conjugate()) <= tol:
                used[j] = True
                break
        else:
            raise ConfigurationError(
                f"parameter {v} has no conjugate partner within {tol:g}"
            )
        used[i] = True
        pairs.append(v if v.imag > 0 else v.conjugate())
    return reals, pairs
