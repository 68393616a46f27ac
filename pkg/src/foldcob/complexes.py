"""Chain complexes with mixed Z / Z2 generators.

A generator tagged FREE contributes a Z summand to its chain group and a
generator tagged TWO_TORSION contributes a Z2 summand.  Homology is
computed by presenting each chain group as Z^n modulo the relations 2e
for the two-torsion generators and running Smith reduction on stacked
matrices.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

from .intmat import (IntMatrix, cokernel_is_trivial, diagonal, from_columns,
                     kernel_basis, smith_normal_form, snf_with_inverses, solve)


class RingTag(Enum):
    FREE = "Z"
    TWO_TORSION = "Z2"


class Direction(Enum):
    HOMOLOGICAL = "homological"
    COHOMOLOGICAL = "cohomological"


@dataclass(frozen=True)
class Generator:
    name: str
    ring: RingTag


class ComplexError(ValueError):
    pass


class NotACycleError(ValueError):
    pass


@dataclass(frozen=True)
class MixedComplex:
    """Finite complex in degrees 0..K.

    For HOMOLOGICAL direction, differentials[i] maps degree i+1 to
    degree i; for COHOMOLOGICAL, differentials[i] maps degree i to
    degree i+1.  Entry [r][c] is the coefficient of target generator r
    in the image of source generator c.
    """

    direction: Direction
    generators: tuple[tuple[Generator, ...], ...]
    differentials: tuple[IntMatrix, ...]

    @property
    def top_degree(self) -> int:
        return len(self.generators) - 1

    def n(self, deg: int) -> int:
        return len(self.generators[deg])

    def names(self, deg: int):
        return [g.name for g in self.generators[deg]]

    def index(self, deg: int, name: str) -> int:
        for i, g in enumerate(self.generators[deg]):
            if g.name == name:
                return i
        raise KeyError(name)

    def torsion_indices(self, deg: int):
        return [i for i, g in enumerate(self.generators[deg])
                if g.ring is RingTag.TWO_TORSION]

    def relations(self, deg: int) -> IntMatrix:
        """Columns 2e for each TWO_TORSION generator of the degree."""
        cols = []
        for i in self.torsion_indices(deg):
            col = [0] * self.n(deg)
            col[i] = 2
            cols.append(col)
        return from_columns(cols, self.n(deg))

    def out_diff(self, deg: int):
        """(matrix, target degree) for the differential leaving deg, or None."""
        if self.direction is Direction.HOMOLOGICAL:
            if deg >= 1:
                return self.differentials[deg - 1], deg - 1
        else:
            if deg < self.top_degree:
                return self.differentials[deg], deg + 1
        return None

    def in_diff(self, deg: int):
        """(matrix, source degree) for the differential entering deg, or None."""
        if self.direction is Direction.HOMOLOGICAL:
            if deg < self.top_degree:
                return self.differentials[deg], deg + 1
        else:
            if deg >= 1:
                return self.differentials[deg - 1], deg - 1
        return None

    def chain(self, deg: int, coeffs: dict[str, int]):
        """Integer vector for a formal sum given as {generator name: coeff}."""
        vec = [0] * self.n(deg)
        for name, c in coeffs.items():
            vec[self.index(deg, name)] += c
        return tuple(vec)


def make_complex(direction, degrees, diffs) -> MixedComplex:
    """Assemble a complex from generator lists and formula dictionaries.

    degrees: list (per degree) of (name, RingTag) pairs.
    diffs: list of dicts, one per differential, mapping a source
    generator name to {target name: coefficient}.  diffs[i] connects
    degrees (i+1 -> i) for homological, (i -> i+1) for cohomological.
    """
    gens = tuple(tuple(Generator(n, r) for n, r in deg) for deg in degrees)
    names = [[g.name for g in deg] for deg in gens]
    mats = []
    for i, formula in enumerate(diffs):
        if direction is Direction.HOMOLOGICAL:
            src, tgt = i + 1, i
        else:
            src, tgt = i, i + 1
        m = [[0] * len(names[src]) for _ in range(len(names[tgt]))]
        for sname, image in formula.items():
            c = names[src].index(sname)
            for tname, coeff in image.items():
                m[names[tgt].index(tname)][c] += coeff
        mats.append(IntMatrix.from_rows(m, len(names[src])))
    return MixedComplex(direction, gens, tuple(mats))


@dataclass(frozen=True)
class Violation:
    kind: str
    degree: int
    detail: str

    def __str__(self):
        return f"{self.kind} at degree {self.degree}: {self.detail}"


def validate_complex(cx: MixedComplex) -> list[Violation]:
    """All structural violations of the mixed-complex invariants."""
    out = []
    for i, d in enumerate(cx.differentials):
        if cx.direction is Direction.HOMOLOGICAL:
            src, tgt = i + 1, i
        else:
            src, tgt = i, i + 1
        if d.rows != cx.n(tgt) or d.cols != cx.n(src):
            out.append(Violation("shape", src,
                                 f"differential is {d.rows}x{d.cols}, "
                                 f"expected {cx.n(tgt)}x{cx.n(src)}"))
            continue
        for c in cx.torsion_indices(src):
            for r in range(cx.n(tgt)):
                if (cx.generators[tgt][r].ring is RingTag.FREE
                        and d.entries[r][c] != 0):
                    out.append(Violation(
                        "two-torsion source maps to free target", src,
                        f"generator {cx.generators[src][c].name} -> "
                        f"{cx.generators[tgt][r].name}"))
    if any(v.kind == "shape" for v in out):
        return out
    # composite must vanish in the target groups
    for i in range(len(cx.differentials) - 1):
        if cx.direction is Direction.HOMOLOGICAL:
            first, second = cx.differentials[i + 1], cx.differentials[i]
            src, tgt = i + 2, i
        else:
            first, second = cx.differentials[i], cx.differentials[i + 1]
            src, tgt = i, i + 2
        comp = second.mul(first)
        for r in range(comp.rows):
            mod2 = cx.generators[tgt][r].ring is RingTag.TWO_TORSION
            for c in range(comp.cols):
                x = comp.entries[r][c]
                if (x % 2 if mod2 else x) != 0:
                    out.append(Violation(
                        "nonzero composite", src,
                        f"d∘d sends {cx.generators[src][c].name} to "
                        f"{x}*{cx.generators[tgt][r].name}"))
    return out


@dataclass(frozen=True)
class AbelianGroupPresentation:
    free_rank: int
    torsion: tuple[int, ...]
    basis_cycles: tuple[tuple[int, ...], ...]
    # solving data: cycle lattice basis and the coordinate change of its SNF
    _cycle_basis: IntMatrix
    _coord_map: IntMatrix          # maps cycle-lattice coords to SNF coords
    _positions: tuple[tuple[int, int], ...]  # (row in coord space, modulus)

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.torsion)

    def is_trivial(self) -> bool:
        return self.rank == 0


def _check_degree(cx: MixedComplex, deg: int):
    if not 0 <= deg <= cx.top_degree:
        raise ComplexError(f"degree {deg} out of range 0..{cx.top_degree}")


@functools.lru_cache(maxsize=None)
def homology(cx: MixedComplex, deg: int) -> AbelianGroupPresentation:
    """Homology (or cohomology, per direction) at the given degree."""
    _check_degree(cx, deg)
    n = cx.n(deg)
    out = cx.out_diff(deg)
    if out is None:
        stacked = IntMatrix.zero(0, n)
    else:
        d_out, tgt = out
        stacked = d_out.hstack(cx.relations(tgt))
    full_kernel = kernel_basis(stacked)
    # project away the relation coordinates; this is injective on the kernel
    k_basis = full_kernel.submatrix(range(n), range(full_kernel.cols))
    inn = cx.in_diff(deg)
    b = cx.relations(deg)
    if inn is not None:
        b = inn[0].hstack(b)
    y = solve(k_basis, b)
    if y is None:
        raise ComplexError("image does not lie in the cycle lattice")
    u2, s2, _, u2inv, _ = snf_with_inverses(y)
    diag = diagonal(s2)
    k = k_basis.cols
    free_pos, tors_pos = [], []
    for i in range(k):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            free_pos.append((i, 0))
        elif d >= 2:
            tors_pos.append((i, d))
    positions = tuple(free_pos + tors_pos)
    basis_mat = k_basis.mul(u2inv)
    cycles = tuple(basis_mat.column(i) for i, _ in positions)
    return AbelianGroupPresentation(
        free_rank=len(free_pos),
        torsion=tuple(d for _, d in tors_pos),
        basis_cycles=cycles,
        _cycle_basis=k_basis,
        _coord_map=u2,
        _positions=positions)


def express_class(cx: MixedComplex, deg: int, cycle) -> tuple[int, ...]:
    """Coordinates of a cycle's class in the homology basis.

    Free coordinates are exact integers; torsion coordinates are
    reduced modulo their coefficient.  Raises NotACycleError if the
    vector is not a cycle of the complex.
    """
    pres = homology(cx, deg)
    vec = from_columns([list(cycle)], cx.n(deg))
    y = solve(pres._cycle_basis, vec)
    if y is None:
        raise NotACycleError("vector is not a cycle at this degree")
    u = pres._coord_map.mul(y)
    coords = []
    for i, d in pres._positions:
        x = u.entries[i][0]
        coords.append(x if d == 0 else x % d)
    return tuple(coords)


@dataclass(frozen=True)
class ChainMap:
    """Degreewise map between complexes of the same direction.

    matrices[d] maps source generators of degree d to target generators
    of degree d; degrees beyond either complex are treated as zero.
    """

    source: MixedComplex
    target: MixedComplex
    matrices: tuple[IntMatrix, ...]

    def degree_count(self) -> int:
        return len(self.matrices)


def validate_chain_map(f: ChainMap) -> list[Violation]:
    out = []
    if f.source.direction is not f.target.direction:
        return [Violation("direction mismatch", 0, "source vs target")]
    if len(f.matrices) != min(f.source.top_degree, f.target.top_degree) + 1:
        return [Violation("shape", 0, "wrong number of degree matrices")]
    for d, m in enumerate(f.matrices):
        if m.rows != f.target.n(d) or m.cols != f.source.n(d):
            return [Violation("shape", d, "matrix shape mismatch")]
    for d, m in enumerate(f.matrices):
        # entries out of a torsion source generator land in Z2; they must
        # vanish on free targets and only matter mod 2 otherwise
        for c in f.source.torsion_indices(d):
            for r in range(f.target.n(d)):
                if (f.target.generators[d][r].ring is RingTag.FREE
                        and m.entries[r][c] != 0):
                    out.append(Violation(
                        "two-torsion source maps to free target", d,
                        f.source.generators[d][c].name))
    # commuting squares, checked in the target groups
    for d in range(len(f.matrices)):
        sd = f.source.out_diff(d)
        if sd is None:
            continue
        mat, tgt_deg = sd
        if tgt_deg >= len(f.matrices):
            continue
        td = f.target.out_diff(d)
        lhs = f.matrices[tgt_deg].mul(mat)
        rhs = (td[0].mul(f.matrices[d]) if td is not None
               else IntMatrix.zero(lhs.rows, lhs.cols))
        for r in range(lhs.rows):
            mod2 = f.target.generators[tgt_deg][r].ring is RingTag.TWO_TORSION
            for c in range(lhs.cols):
                x = lhs.entries[r][c] - rhs.entries[r][c]
                if (x % 2 if mod2 else x) != 0:
                    out.append(Violation(
                        "chain-map square fails", d,
                        f"source generator {f.source.generators[d][c].name}"))
    return out


def induced_map(f: ChainMap, deg: int) -> IntMatrix:
    """Matrix of the induced map on homology in the computed bases."""
    bad = validate_chain_map(f)
    if bad:
        raise ComplexError(f"not a chain map: {bad[0]}")
    src = homology(f.source, deg)
    tgt_pres = homology(f.target, deg)
    cols = []
    for cyc in src.basis_cycles:
        image = f.matrices[deg].apply(cyc)
        cols.append(list(express_class(f.target, deg, image)))
    return from_columns(cols, tgt_pres.rank)


def is_surjective_on_degree(f: ChainMap, deg: int) -> bool:
    """Surjectivity of f in degree deg onto the target chain group."""
    m = f.matrices[deg].hstack(f.target.relations(deg))
    return cokernel_is_trivial(m)


def induced_is_isomorphism(f: ChainMap, deg: int) -> bool:
    """True iff the induced map on degree-deg homology is bijective.

    Equal invariant factors plus surjectivity suffice: a surjective
    endo-type map between isomorphic finitely generated groups is
    injective (such groups are Hopfian).
    """
    src = homology(f.source, deg)
    tgt = homology(f.target, deg)
    if (src.free_rank, src.torsion) != (tgt.free_rank, tgt.torsion):
        return False
    m = induced_map(f, deg)
    rel_cols = []
    for i, d in enumerate(tgt.torsion):
        col = [0] * tgt.rank
        col[tgt.free_rank + i] = d
        rel_cols.append(col)
    m = m.hstack(from_columns(rel_cols, tgt.rank))
    return cokernel_is_trivial(m)


def hom_dual(cx: MixedComplex, g: RingTag) -> MixedComplex:
    """The cochain complex Hom(cx, Z) or Hom(cx, Z2).

    Hom(Z2, Z) = 0, so two-torsion generators disappear over Z; over Z2
    every generator survives with Z2 coefficients.
    """
    if cx.direction is not Direction.HOMOLOGICAL:
        raise ComplexError("hom_dual expects a homological complex")
    if g is RingTag.FREE:
        keep = [[i for i, gen in enumerate(degree) if gen.ring is RingTag.FREE]
                for degree in cx.generators]
        gens = tuple(tuple(cx.generators[d][i] for i in keep[d])
                     for d in range(cx.top_degree + 1))
        mats = []
        for d in range(cx.top_degree):
            # cx.differentials[d]: degree d+1 -> d; dual maps degree d -> d+1
            m = cx.differentials[d].submatrix(keep[d], keep[d + 1]).transpose()
            mats.append(m)
        return MixedComplex(Direction.COHOMOLOGICAL, gens, tuple(mats))
    gens = tuple(tuple(Generator(gen.name, RingTag.TWO_TORSION) for gen in degree)
                 for degree in cx.generators)
    mats = tuple(m.transpose().mod2() for m in cx.differentials)
    return MixedComplex(Direction.COHOMOLOGICAL, gens, mats)


def zero_complex(direction=Direction.HOMOLOGICAL) -> MixedComplex:
    return MixedComplex(direction, ((),), ())
