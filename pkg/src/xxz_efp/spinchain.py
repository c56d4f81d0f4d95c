"""Concrete XXZ chain matrices at the combinatorial point and the brute-force
emptiness-formation-probability oracle.

Conventions
-----------
* Spin configurations are bitmasks; bit i set means spin up at site i+1.
* q = w = exp(2*pi*i/3), so the anisotropy (q + 1/q)/2 equals -1/2.
* Odd chains are periodic.  Even chains are twisted: boundary operators obey
  sigma^pm_{N+1} = exp(pm 2*pi*i/3) sigma^pm_1.  The transfer-matrix twist
  realizing the eigenvalue-1 normalization is diag(-1/w, -w), i.e. the
  (-2*pi/3)-twist times the central sign; with the bare diag(w^s, w^-s) the
  distinguished eigenvalue is -1 instead.  This pin is certified by the
  homogeneous specialization of the polynomial eigenvectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .rings import CYC3, Cyclotomic3, W, omega_power
from .linalg import RingMatrix, kernel_basis

DELTA = Fraction(-1, 2)


def sector_configs(N: int, m: int):
    """All N-site configurations with m spins up, ascending as integers."""
    out = []
    for ups in combinations(range(N), m):
        c = 0
        for i in ups:
            c |= 1 << i
        out.append(c)
    out.sort()
    return out


def config_bits(c: int, N: int) -> str:
    """Site-1-first string of 0/1, 1 meaning spin up."""
    return "".join("1" if c >> i & 1 else "0" for i in range(N))


def config_from_bits(s: str) -> int:
    c = 0
    for i, ch in enumerate(s):
        if ch == "1":
            c |= 1 << i
    return c


@dataclass(frozen=True)
class StateVector:
    N: int
    sector: int
    sz_tag: str  # "-", "+", or "e"
    components: dict  # config bitmask -> Cyclotomic3

    def component(self, c: int) -> Cyclotomic3:
        return self.components.get(c, CYC3.zero)

    def to_json(self):
        return {
            "N": self.N,
            "sector": self.sector,
            "sz": self.sz_tag,
            "components": {
                config_bits(c, self.N): CYC3.encode(v)
                for c, v in sorted(self.components.items())
            },
        }


# ---------------------------------------------------------------------------
# Local matrices.
# ---------------------------------------------------------------------------

def r_matrix_entries(z, q, ring=CYC3):
    """Entries (a, b, c1, c2) of R(z); raises at the normalization pole."""
    z = ring.coerce(z)
    q = ring.coerce(q)
    qi = ring.invert(q)
    den = q - qi * z
    if ring.is_zero(den):
        raise ZeroDivisionError("R-matrix normalization pole at this z")
    inv = ring.invert(den)
    a = (q * z - qi) * inv
    b = (z - ring.one) * inv
    c1 = (q - qi) * z * inv
    c2 = (q - qi) * inv
    return a, b, c1, c2


def r_matrix(z, q, ring=CYC3) -> RingMatrix:
    """R(z) in the basis (uu, ud, du, dd) of a two-site space."""
    a, b, c1, c2 = r_matrix_entries(z, q, ring)
    o = ring.zero
    return RingMatrix(ring, [
        [a, o, o, o],
        [o, b, c1, o],
        [o, c2, b, o],
        [o, o, o, a],
    ])


def r_check(z, q, ring=CYC3) -> RingMatrix:
    """Braided matrix P.R(z); equals the identity at z = 1."""
    a, b, c1, c2 = r_matrix_entries(z, q, ring)
    o = ring.zero
    return RingMatrix(ring, [
        [a, o, o, o],
        [o, c2, b, o],
        [o, b, c1, o],
        [o, o, o, a],
    ])


def temperley_lieb_e(q, ring=CYC3) -> RingMatrix:
    """Local Temperley-Lieb generator; e^2 = -(q + 1/q) e."""
    q = ring.coerce(q)
    qi = ring.invert(q)
    o, i = ring.zero, ring.one
    return RingMatrix(ring, [
        [o, o, o, o],
        [o, -q, i, o],
        [o, i, -qi, o],
        [o, o, o, o],
    ])


def exchange_p() -> RingMatrix:
    o, i = CYC3.zero, CYC3.one
    return RingMatrix(CYC3, [
        [i, o, o, o],
        [o, o, i, o],
        [o, i, o, o],
        [o, o, o, i],
    ])


def p_weight(za, zb, ring):
    """Diagonal of (za p+ + p-) (zb p+ + p-) in the (uu, ud, du, dd) basis."""
    za, zb = ring.coerce(za), ring.coerce(zb)
    return [za * zb, za, zb, ring.one]


# ---------------------------------------------------------------------------
# Transfer matrix by auxiliary-space propagation (one sector at a time).
# ---------------------------------------------------------------------------

def _site_transitions(entries):
    """Aux-walk table: key (aux, site_in) -> list of (aux_next, site_out, amp).

    aux/site values: 1 = up, 0 = down.  Spin conservation per vertex keeps
    the walk narrow, so building a sector block costs O(#configs^2 * N).
    """
    a, b, c1, c2 = entries
    return {
        (1, 1): [(1, 1, a), (0, 0, c1)],
        (0, 1): [(0, 1, b)],
        (1, 0): [(1, 0, b)],
        (0, 0): [(1, 1, c2), (0, 0, a)],
    }


GROUND_TWIST_EVEN = (-1, True)  # (phi in units of 2*pi/3, central sign)


def twist_diag(phi_third, negate=False):
    """Aux twist entries on (up, down).  ``negate`` composes with -1; the
    even-chain eigenvalue-1 normalization uses twist_diag(-1, True)."""
    up, dn = omega_power(phi_third), omega_power(-phi_third)
    if negate:
        up, dn = -up, -dn
    return up, dn


def transfer_sector(N, m, y, zs, phi_third, q=W, ring=CYC3,
                    negate_twist=None) -> RingMatrix:
    """Block of T(y | z, phi) on the popcount-m sector.

    ``phi_third`` is the twist in units of 2*pi/3 (so +1, -1 or 0); by
    default a nonzero twist carries the central sign of the eigenvalue-1
    normalization (see the module docstring).
    """
    configs = sector_configs(N, m)
    index = {c: i for i, c in enumerate(configs)}
    q = ring.coerce(q)
    tables = []
    for i in range(N):
        x = ring.exact_div(ring.coerce(y), ring.coerce(zs[i]))
        tables.append(_site_transitions(r_matrix_entries(x, q, ring)))
    if negate_twist is None:
        negate_twist = bool(phi_third)
    twist = twist_diag(phi_third, negate_twist)
    if ring is not CYC3:
        if phi_third or negate_twist:
            raise ValueError("twist needs the cyclotomic ring")
        twist = (ring.one, ring.one)
    size = len(configs)
    rows = [[ring.zero] * size for _ in range(size)]
    for c in configs:
        col = index[c]
        # states: (aux_start, aux_current, output_bits) -> amplitude
        states = {(1, 1, 0): ring.one, (0, 0, 0): ring.one}
        for i in range(N):
            table = tables[i]
            nu = c >> i & 1
            nxt = {}
            for (a0, aux, out), amp in states.items():
                for aux2, mu, coef in table[(aux, nu)]:
                    key = (a0, aux2, out | (mu << i))
                    val = amp * coef
                    prev = nxt.get(key)
                    nxt[key] = val if prev is None else prev + val
            states = nxt
        for (a0, aux, out), amp in states.items():
            if a0 != aux:
                continue
            w = twist[0] if a0 == 1 else twist[1]
            i = index[out]
            rows[i][col] = rows[i][col] + amp * w
    return RingMatrix(ring, rows)


def hamiltonian_sector(N, m, boundary) -> RingMatrix:
    """XXZ Hamiltonian block at Delta = -1/2 on the popcount-m sector.

    ``boundary`` is "periodic" (odd N) or "twisted" (even N).
    """
    if boundary == "periodic":
        if N % 2 == 0:
            raise ValueError("periodic boundary is used with odd N")
    elif boundary == "twisted":
        if N % 2 == 1:
            raise ValueError("twisted boundary is used with even N")
    else:
        raise ValueError(f"unknown boundary {boundary!r}")
    ring = CYC3
    configs = sector_configs(N, m)
    index = {c: i for i, c in enumerate(configs)}
    size = len(configs)
    rows = [[ring.zero] * size for _ in range(size)]
    half = Fraction(1, 2)
    # Boundary hop phases: sigma^-_{N+1} = w sigma^-_1 in the gauge of the
    # pinned transfer twist (the conjugate assignment breaks [H, T] = 0).
    hop_up_phase = omega_power(1) if boundary == "twisted" else CYC3.one
    hop_dn_phase = omega_power(-1) if boundary == "twisted" else CYC3.one
    for c in configs:
        col = index[c]
        diag = ring.zero
        for i in range(N):
            j = (i + 1) % N
            bi, bj = c >> i & 1, c >> j & 1
            zz = 1 if bi == bj else -1
            diag = diag + Cyclotomic3(-half * DELTA * zz)
            if bi != bj:
                flipped = c ^ (1 << i) ^ (1 << j)
                # raising at i, lowering at j happens when i is down, j is up
                amp = Cyclotomic3(-1)
                if j < i:  # wrapped bond (N, 1)
                    amp = amp * (hop_up_phase if bi == 0 else hop_dn_phase)
                r = index[flipped]
                rows[r][col] = rows[r][col] + amp
        rows[col][col] = rows[col][col] + diag
    return RingMatrix(ring, rows)


# ---------------------------------------------------------------------------
# Ground states and the brute-force EFP.
# ---------------------------------------------------------------------------

def ground_state_sector(N, m, tag, phi_third, probes=(2, 3)) -> StateVector:
    base = (1 << m) - 1
    kernels = []
    for y in probes:
        t = transfer_sector(N, m, Fraction(y), [Fraction(1)] * N, phi_third)
        rows = [[x - (CYC3.one if i == j else CYC3.zero)
                 for j, x in enumerate(row)] for i, row in enumerate(t.rows)]
        ker = kernel_basis(RingMatrix(CYC3, rows))
        if len(ker) != 1:
            raise RuntimeError(
                f"kernel of T({y})-1 on N={N}, m={m} has dimension {len(ker)};"
                " convention bug")
        kernels.append(ker[0])
    configs = sector_configs(N, m)
    idx = configs.index(base)
    vecs = []
    for v in kernels:
        if v[idx].is_zero():
            raise RuntimeError("kernel vector vanishes on the base config")
        scale = v[idx].inv()
        vecs.append([x * scale for x in v])
    if vecs[0] != vecs[1]:
        raise RuntimeError("kernels at the two probe points disagree")
    comps = {c: x for c, x in zip(configs, vecs[0]) if not x.is_zero()}
    return StateVector(N=N, sector=m, sz_tag=tag, components=comps)


def ground_state(N: int):
    """Eigenvalue-1 eigenvectors of the transfer matrix at z = 1.

    Odd N: two states tagged "-" and "+" (S^z = -1/2 and +1/2), periodic.
    Even N: one state tagged "e" (S^z = 0), twist +2*pi/3.
    Components are normalized so the maximally aligned configuration
    (all ups first) has component 1.  Each kernel is extracted at y = 2 and
    re-verified at y = 3.
    """
    if N % 2:
        n = N // 2
        return {
            "-": ground_state_sector(N, n, "-", 0),
            "+": ground_state_sector(N, n + 1, "+", 0),
        }
    return {"e": ground_state_sector(N, N // 2, "e", GROUND_TWIST_EVEN[0])}


def efp_homogeneous(state: StateVector, k: int, variant: str) -> Cyclotomic3:
    """Probability of k aligned up spins at sites 1..k in ``state``.

    variant "conjugated" pairs with the conjugate vector (the physical EFP);
    "bilinear" pairs the vector with itself (the pseudo EFP).  Either way the
    result does not depend on the normalization of ``state``.
    """
    if k > state.N:
        raise ValueError("k exceeds the chain length")
    if variant not in ("conjugated", "bilinear"):
        raise ValueError(f"unknown variant {variant!r}")
    conj = variant == "conjugated"
    mask = (1 << k) - 1
    num = CYC3.zero
    den = CYC3.zero
    for c, v in state.components.items():
        w = (v.conj() if conj else v) * v
        den = den + w
        if c & mask == mask:
            num = num + w
    return num / den
