"""The two piecewise-linear bijections built on octahedron propagation.

Associativity: a pair of hives glued along a common edge (one in the ground
role, one in the ceiling role) propagates to a polarized function on the
tetrahedron whose two wall restrictions form the image pair.  The recursion
is invertible, so this is a bijection between the two coproducts

    U_g DC(mu, g; lam) x DC(pi, sigma; g)
      <->  U_t DC(mu, pi; t) x DC(t, sigma; lam),

whose cardinality identity is the associativity of Littlewood-Richardson
multiplication.

Commutativity: a hive h in DC(mu, nu; lam) of size n determines a polarized
discretely concave function on the top half of the octahedron inscribed in
the tetrahedron of size 2n (the square pyramid with vertices XY, OY, OZ, XZ
and apex YZ, i.e. the lattice points with y <= n, z <= n, y + z >= n,
x + y + z <= 2n).  Two faces are prescribed: the ceiling face carries h and
the y = n face carries the separable hive of mu.  The octahedron rule fills
the rest; octahedra cut by the square base y + z = n lose their OX vertex,
which degenerates the rule to the equality of the two surviving diagonal
sums.  The z = n face, read from the apex, is a hive in DC(nu, mu; lam),
and h -> commutor(h) is injective with equal counts on both sides: the
commutativity bijection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grids import (FaceChart, TetraPoint, UnitOctahedron, UnitRhombus2D,
                    cutting_sections, unit_octahedra, unit_rhombi_2d)
from .hive import (Hive, boundary, prefix_sums,
                   require_dc_partition_boundary, validate_dc)
from .octahedron import extract_face, inverse_propagate, propagate


@dataclass(frozen=True)
class GluedPair:
    """Ground/ceiling input of the associativity map: hyp(f1) == base(f2)."""

    f1: Hive
    f2: Hive

    @property
    def glue(self) -> tuple[int, ...]:
        return boundary(self.f1).hyp

    def validate(self) -> None:
        if self.f1.n != self.f2.n:
            raise ValueError("glued pair: sizes differ")
        for name, h in (("f1", self.f1), ("f2", self.f2)):
            if not h.is_normalized():
                raise ValueError(f"glued pair: {name} is not normalized")
            if validate_dc(h):
                raise ValueError(f"glued pair: {name} is not discretely concave")
        if boundary(self.f1).hyp != boundary(self.f2).base:
            raise ValueError(
                "glued pair: hypotenuse of f1 and base of f2 disagree: "
                f"{boundary(self.f1).hyp} vs {boundary(self.f2).base}")


@dataclass(frozen=True)
class WallPair:
    """Wall output of the associativity map: base(w1) == left(w2), and the
    two walls share the edge w1(i, 0) == w2(0, i)."""

    w1: Hive
    w2: Hive

    @property
    def glue(self) -> tuple[int, ...]:
        return boundary(self.w1).base

    def validate(self) -> None:
        if self.w1.n != self.w2.n:
            raise ValueError("wall pair: sizes differ")
        for name, h in (("w1", self.w1), ("w2", self.w2)):
            if not h.is_normalized():
                raise ValueError(f"wall pair: {name} is not normalized")
            if validate_dc(h):
                raise ValueError(f"wall pair: {name} is not discretely concave")
        if boundary(self.w1).base != boundary(self.w2).left:
            raise ValueError(
                "wall pair: base of w1 and left edge of w2 disagree: "
                f"{boundary(self.w1).base} vs {boundary(self.w2).left}")


def assoc_forward(pair: GluedPair) -> WallPair:
    """Propagate f1 (ground) and f2 (ceiling) and read the two walls.

    Boundary bookkeeping, writing (l, h, b) for (left, hyp, base):
    w1 gets (l(f1), l(f2), t) and w2 gets (t, h(f2), b(f1)) where t is the
    new glue along the O-Z edge.  Both walls are discretely concave because
    the propagated function is polarized discretely concave.
    """
    pair.validate()
    t = propagate(pair.f1, pair.f2)
    n = t.n
    w1 = extract_face(t, FaceChart.wall_x0(n))
    w2 = extract_face(t, FaceChart.wall_y0(n))
    return WallPair(w1, w2)


def assoc_inverse(pair: WallPair) -> GluedPair:
    """Rebuild the polarized function from the walls and read ground and
    ceiling back; inverse of :func:`assoc_forward`."""
    pair.validate()
    t = inverse_propagate(pair.w1, pair.w2)
    n = t.n
    f1 = extract_face(t, FaceChart.ground(n))
    f2 = extract_face(t, FaceChart.ceiling(n)).normalize()
    return GluedPair(f1, f2)


def half_octahedron_points(n: int) -> list[TetraPoint]:
    """Lattice points of the top half of the octahedron inscribed in the
    size-2n tetrahedron: y <= n, z <= n, y + z >= n, x + y + z <= 2n."""
    return [(x, y, z)
            for z in range(n + 1)
            for y in range(n - z, n + 1)
            for x in range(2 * n - y - z + 1)]


def half_octahedron_function(h: Hive) -> dict[TetraPoint, int]:
    """The polarized discretely concave function on the half-octahedron
    determined by h.

    The ceiling face (x + y + z = 2n) carries h via (x, y, z) ->
    h(n - y, n - z), so the apex YZ = (0, n, n) takes h's origin value and
    the corners XY, XZ take the values at h's corners Y, X.  The y = n face
    carries the separable hive of mu = left(h).  Filling proceeds level by
    level in z, within a level by descending x + y; each new point is the
    OZ vertex of an octahedron whose other vertices are known, except on
    the square base y + z = n where the OX vertex falls outside the
    half-octahedron and the rule degenerates to the equality of the two
    remaining diagonal sums.
    """
    require_dc_partition_boundary(h, "half_octahedron_function")
    n = h.n
    smu = prefix_sums(boundary(h).left)
    values: dict[TetraPoint, int] = {}
    for z in range(n + 1):
        for y in range(n - z, n + 1):
            x = 2 * n - y - z
            values[(x, y, z)] = h[n - y, n - z]
    for z in range(n + 1):
        for x in range(n - z + 1):
            values[(x, n, z)] = smu[x]
    for z in range(1, n + 1):
        for y in range(n - 1, n - z - 1, -1):
            for x in range(2 * n - y - z - 1, -1, -1):
                across = values[(x + 1, y + 1, z - 1)]
                south = values[(x, y + 1, z - 1)] + values[(x + 1, y, z)]
                if y + z == n:
                    values[(x, y, z)] = south - across
                else:
                    east = values[(x + 1, y, z - 1)] + values[(x, y + 1, z)]
                    values[(x, y, z)] = max(east, south) - across
    return values


def commutor(h: Hive) -> Hive:
    """The commutativity bijection DC(mu, nu; lam) -> DC(nu, mu; lam).

    Reads the z = n face of the half-octahedron function off with corners
    O -> YZ = (0, n, n), X -> XZ = (n, 0, n), Y -> OZ = (0, 0, n), then
    normalizes.  Injective with |DC(mu, nu; lam)| = |DC(nu, mu; lam)|.
    """
    n = h.n
    values = half_octahedron_function(h)
    apex = values[(0, n, n)]
    return Hive.build(n, lambda i, j: values[(i, n - i - j, n)] - apex)


@dataclass(frozen=True)
class CommutorDiagnostics:
    """Test evidence for the half-octahedron construction.

    rhombus_violations: failed rhombus inequalities among the cutting-plane
    rhombi whose four vertices lie in the half-octahedron (this is the
    discrete-concavity content of the construction).
    polarization_violations: octahedra fully inside the half-octahedron
    where the propagation rule fails.
    square_violations: base cells of the square face y + z = n whose two
    antipodal vertex sums differ (separability of the base).
    pmu_face_mismatch / pnu_wall_mismatch: points where the y = n face
    differs from the separable hive of mu, and where the x = 0 wall face
    differs from the separable profile of nu (values S^nu_{n-y} up to a
    constant).
    """

    rhombus_violations: tuple[tuple[FaceChart, UnitRhombus2D], ...]
    polarization_violations: tuple[UnitOctahedron, ...]
    square_violations: tuple[TetraPoint, ...]
    pmu_face_mismatch: tuple[TetraPoint, ...]
    pnu_wall_mismatch: tuple[TetraPoint, ...]

    def ok(self) -> bool:
        return not (self.rhombus_violations or self.polarization_violations
                    or self.square_violations or self.pmu_face_mismatch
                    or self.pnu_wall_mismatch)


def half_octahedron_diagnostics(h: Hive) -> CommutorDiagnostics:
    """Check every structural claim behind :func:`commutor` on one input."""
    n = h.n
    b = boundary(h)
    values = half_octahedron_function(h)
    inside = set(values)

    rhombus_bad = []
    for chart in cutting_sections(2 * n, min_size=2):
        for rh in unit_rhombi_2d(chart.size):
            pts = [chart.point(i, j) for (i, j) in rh.vertices()]
            if not all(p in inside for p in pts):
                continue
            (c1, c2), (f1, f2) = rh.cut, rh.free
            slack = (values[chart.point(*c1)] + values[chart.point(*c2)]
                     - values[chart.point(*f1)] - values[chart.point(*f2)])
            if slack < 0:
                rhombus_bad.append((chart, rh))

    polar_bad = []
    for oct in unit_octahedra(2 * n):
        if not all(v in inside for v in oct.vertices()):
            continue
        if values[oct.oz] + values[oct.xy] != max(
                values[oct.ox] + values[oct.yz],
                values[oct.oy] + values[oct.xz]):
            polar_bad.append(oct)

    square_bad = []
    for y in range(n):
        for x in range(n):
            a = values[(x, y, n - y)] + values[(x + 1, y + 1, n - y - 1)]
            d = values[(x + 1, y, n - y)] + values[(x, y + 1, n - y - 1)]
            if a != d:
                square_bad.append((x, y, n - y))

    smu = prefix_sums(b.left)
    pmu_bad = [(x, n, z)
               for z in range(n + 1) for x in range(n - z + 1)
               if values[(x, n, z)] != smu[x]]

    snu = prefix_sums(b.hyp)
    shift = values[(0, n, n)] - snu[0]
    pnu_bad = [(0, y, z)
               for y in range(n + 1) for z in range(n - y, n + 1)
               if values[(0, y, z)] != snu[n - y] + shift]

    return CommutorDiagnostics(tuple(rhombus_bad), tuple(polar_bad),
                               tuple(square_bad), tuple(pmu_bad),
                               tuple(pnu_bad))
