"""
Closed-form ASUA values.

Every evaluator takes 1-based spine indices, absorber v_n, and returns an
exact integer.

SD2 and SD3 are evaluated through the SD4 formula. The SD2/SD3
statements carry (k+1)^2 in the prefix piece where SD4 has (k-1)^2. Treating
v_1..v_{k-1} as a stem on v_k gives (k-1)^2, and so does the exact solver.
``printed_constant=True`` evaluates the (k+1)^2 variant so that
``asua verify`` can show it failing.
"""

from fractions import Fraction

from asua.errors import BadSpec, OutOfRange
from asua.formulas.spec import SeaDragonSpec


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise OutOfRange(f"index i={i} outside 1..{n - 1}")


def path_asua(n: int, i: int) -> int:
    """t(P_n, v_i, v_n) = (n-1)^2 - (i-1)^2."""
    if n < 2:
        raise OutOfRange(f"path needs n >= 2, got {n}")
    _check_index(n, i)
    return (n - 1) ** 2 - (i - 1) ** 2


def cycle_asua(n: int, i: int) -> int:
    """t(C_n, v_i, v_n) = i(n-i)."""
    if n < 3:
        raise OutOfRange(f"cycle needs n >= 3, got {n}")
    _check_index(n, i)
    return i * (n - i)


def stem_offset(l: int, j: int) -> int:  # noqa: E741
    """Excess of stem vertex u_j over its attachment vertex: l^2 - (j-1)^2 (u_{l+1} is v)."""
    if l < 1:
        raise OutOfRange(f"stem length must be at least 1, got {l}")
    if not 1 <= j <= l + 1:
        raise OutOfRange(f"stem index j={j} outside 1..{l + 1}")
    return l * l - (j - 1) ** 2


def _require(spec: SeaDragonSpec, *variants: str) -> None:
    if spec.variant not in variants:
        raise BadSpec(f"expected a {'/'.join(v.upper() for v in variants)} spec, got {spec.variant.upper()}")


def sd1_asua(spec: SeaDragonSpec, i: int) -> int:
    """
    Spine value of T(n, {k_1, ..., k_a}).

    With k_0 = 1 and s the number of leaf positions at or below i,
    t(v_i) = n^2 - i^2 + 2(a-1)n - 2(s-1)i - 2*sum(k_{s+1}..k_a); for s = a
    the sum is empty, which is the tail piece n^2 - i^2 + 2(a-1)(n-i).
    """
    _require(spec, "sd1")
    n, ks = spec.n, spec.leaf_positions
    _check_index(n, i)
    a = len(ks)
    if a == 0:
        return path_asua(n, i)
    s = sum(1 for k in ks if k <= i)
    return n * n - i * i + 2 * (a - 1) * n - 2 * (s - 1) * i - 2 * sum(ks[s:])


def _cluster_asua(n: int, k: int, d: int, i: int, printed_constant: bool) -> int:
    _check_index(n, i)
    if d < 1:
        raise BadSpec(f"stem mass d must be at least 1, got {d}")
    if i >= k:
        return n * n - i * i + 2 * (d - 1) * (n - i)
    prefix = (k + 1) ** 2 if printed_constant else (k - 1) ** 2
    return n * n - k * k + 2 * (d - 1) * (n - k) + prefix - (i - 1) ** 2


def sd4_asua(spec: SeaDragonSpec, i: int) -> int:
    """Spine value of T(n, k, (c_1, ..., c_r)); only d = sum(c) matters."""
    _require(spec, "sd4")
    return _cluster_asua(spec.n, spec.position, spec.stem_mass, i, False)


def sd2_asua(spec: SeaDragonSpec, i: int, printed_constant: bool = False) -> int:
    """Spine value of T(n, (k, b)): SD4 with b unit stems."""
    _require(spec, "sd2")
    return _cluster_asua(spec.n, spec.position, spec.leaf_count, i, printed_constant)


def sd3_asua(spec: SeaDragonSpec, i: int, printed_constant: bool = False) -> int:
    """Spine value of T(n, k^(c)): SD4 with one stem of length c."""
    _require(spec, "sd3")
    return _cluster_asua(spec.n, spec.position, spec.stem_lengths[0], i, printed_constant)


def spine_asua(spec: SeaDragonSpec, i: int, printed_constant: bool = False) -> int:
    """Dispatch on the spec's variant."""
    if spec.variant == "sd1":
        return sd1_asua(spec, i)
    if spec.variant == "sd2":
        return sd2_asua(spec, i, printed_constant)
    if spec.variant == "sd3":
        return sd3_asua(spec, i, printed_constant)
    return sd4_asua(spec, i)


def sea_dragon_values(spec: SeaDragonSpec, printed_constant: bool = False) -> dict[int, int]:
    """
    Closed-form ASUA of every transient vertex of the generated tree, keyed
    by 0-based vertex id.

    Leaves and stem vertices add ``stem_offset`` to their attachment's value.
    """
    values = {i - 1: spine_asua(spec, i, printed_constant) for i in range(1, spec.n)}
    for node in spec.layout():
        base = values[node.position - 1]
        values[node.vertex] = base + stem_offset(node.length, node.j)
    return values


def local_rule_degree3(tx: Fraction | int, ty: Fraction | int) -> Fraction:
    """ASUA of v when N(v) = {x, y, leaf}: (t(x) + t(y))/2 + 2."""
    return Fraction(tx + ty) / 2 + 2


def local_rule_stem_branch(tx: Fraction | int, ty: Fraction | int, d: int) -> Fraction:
    """ASUA of a spine vertex carrying stems of total length d: (t(x) + t(y))/2 + d + 1."""
    if d < 1:
        raise BadSpec(f"stem mass d must be at least 1, got {d}")
    return Fraction(tx + ty) / 2 + d + 1
