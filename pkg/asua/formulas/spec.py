"""Sea-dragon family parameters."""

from dataclasses import dataclass
from typing import Literal

from asua.errors import BadSpec

Variant = Literal["sd1", "sd2", "sd3", "sd4"]


@dataclass(frozen=True)
class AttachedVertex:
    """A non-spine vertex of a generated sea dragon.

    ``j`` follows the stem convention: u_1 is the leaf, u_length touches the spine.
    """

    vertex: int
    position: int  # 1-based spine index k
    stem: int  # 0-based stem index within the whole tree
    j: int
    length: int


@dataclass(frozen=True)
class SeaDragonSpec:
    """
    Parameters identifying one SD1-SD4 family member.

    Positions are 1-based spine indices, as in the T(n, ...) notation. The
    spine is v_1..v_n and v_n absorbs.
    """

    variant: Variant
    n: int
    leaf_positions: tuple[int, ...] = ()  # SD1: k_1 < ... < k_a
    position: int | None = None  # SD2-SD4: k
    leaf_count: int = 0  # SD2: b
    stem_lengths: tuple[int, ...] = ()  # SD3: (c,), SD4: (c_1, ..., c_r)

    def __post_init__(self):
        if self.n < 2:
            raise BadSpec(f"spine length must be at least 2, got {self.n}")
        if self.variant == "sd1":
            ks = self.leaf_positions
            if any(b <= a for a, b in zip(ks, ks[1:])):
                raise BadSpec(f"leaf positions must be strictly increasing: {list(ks)}")
            if ks and (ks[0] < 2 or ks[-1] > self.n - 1):
                raise BadSpec(f"leaf positions must lie in 2..{self.n - 1}: {list(ks)}")
            return
        if self.variant not in ("sd2", "sd3", "sd4"):
            raise BadSpec(f"unknown variant {self.variant!r}")
        k = self.position
        if k is None or not 2 <= k <= self.n - 1:
            raise BadSpec(f"position k must lie in 2..{self.n - 1}, got {k}")
        if self.variant == "sd2" and self.leaf_count < 1:
            raise BadSpec(f"leaf count b must be at least 1, got {self.leaf_count}")
        if self.variant == "sd3" and len(self.stem_lengths) != 1:
            raise BadSpec("SD3 has exactly one stem")
        if self.variant in ("sd3", "sd4"):
            if not self.stem_lengths:
                raise BadSpec("at least one stem required")
            if any(c < 1 for c in self.stem_lengths):
                raise BadSpec(f"stem lengths must be at least 1: {list(self.stem_lengths)}")

    @classmethod
    def sd1(cls, n: int, positions: list[int] | tuple[int, ...]) -> "SeaDragonSpec":
        return cls("sd1", n, leaf_positions=tuple(positions))

    @classmethod
    def sd2(cls, n: int, k: int, b: int) -> "SeaDragonSpec":
        return cls("sd2", n, position=k, leaf_count=b)

    @classmethod
    def sd3(cls, n: int, k: int, c: int) -> "SeaDragonSpec":
        return cls("sd3", n, position=k, stem_lengths=(c,))

    @classmethod
    def sd4(cls, n: int, k: int, lengths: list[int] | tuple[int, ...]) -> "SeaDragonSpec":
        return cls("sd4", n, position=k, stem_lengths=tuple(lengths))

    @property
    def stem_mass(self) -> int:
        """d: total number of non-spine vertices hanging at v_k (SD2-SD4)."""
        if self.variant == "sd2":
            return self.leaf_count
        return sum(self.stem_lengths)

    def stems(self) -> list[tuple[int, int]]:
        """``(position, length)`` per stem, in vertex-numbering order; leaves have length 1."""
        if self.variant == "sd1":
            return [(k, 1) for k in self.leaf_positions]
        if self.variant == "sd2":
            return [(self.position, 1)] * self.leaf_count
        return [(self.position, c) for c in self.stem_lengths]

    @property
    def vertex_count(self) -> int:
        return self.n + sum(length for _, length in self.stems())

    def layout(self) -> list[AttachedVertex]:
        """
        Non-spine vertices in id order: by position, then stem, then distance
        from the spine.
        """
        out = []
        vertex = self.n
        for stem, (k, length) in enumerate(self.stems()):
            for dist in range(1, length + 1):
                out.append(AttachedVertex(vertex=vertex, position=k, stem=stem,
                                          j=length - dist + 1, length=length))
                vertex += 1
        return out

    @property
    def label(self) -> str:
        if self.variant == "sd1":
            return f"T({self.n},{{{','.join(map(str, self.leaf_positions))}}})"
        if self.variant == "sd2":
            return f"T({self.n},({self.position},{self.leaf_count}))"
        if self.variant == "sd3":
            return f"T({self.n},{self.position}^({self.stem_lengths[0]}))"
        return f"T({self.n},{self.position},({','.join(map(str, self.stem_lengths))}))"
