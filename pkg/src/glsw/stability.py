"""King-style (semi)stability with exhaustive submodule search over prime
fields.

A weight is a rational linear functional on dimension vectors.  The defect
weight of an affine quiver separates the preprojective, regular and
preinjective parts; a module of defect-weight zero is semistable when no
submodule has positive weight.  Rational-entry modules are certified by
reducing modulo several small primes.
"""

from __future__ import annotations

from fractions import Fraction

from glsw.algebra import gls_presentation
from glsw.exact import Mat, rref
from glsw import reps as R
from glsw.decomposition import rigid_of_rank

DEFAULT_CONFIG = {"primes": (3, 5, 7), "dim_cap": 8, "enum_cap": 1_000_000}


class Weight:
    """Rational linear functional on dimension vectors."""

    def __init__(self, coords, provenance="custom"):
        self.coords = [Fraction(x) for x in coords]
        self.provenance = provenance

    def value(self, dims):
        return sum(c * d for c, d in zip(self.coords, dims))

    def __repr__(self):
        return f"Weight({[str(c) for c in self.coords]}, {self.provenance})"


def weight_from_lf_class(quiver, w):
    """The weight pairing a rank class against dimension vectors through the
    bilinear form (dimension vectors divided by the symmetrizer)."""
    coords = []
    for i in range(quiver.n):
        e = [0] * quiver.n
        e[i] = 1
        coords.append(Fraction(quiver.ringel_form(w, e), quiver.c[i]))
    return Weight(coords, provenance="g-vector dual")


def defect_weight(quiver):
    wt = weight_from_lf_class(quiver, quiver.null_root())
    wt.provenance = "defect"
    return wt


# ---------------------------------------------------------------------------
# submodule lattice


class SubmoduleLattice:
    def __init__(self, V, members, complete):
        self.V = V
        self.members = members  # list of per-vertex row-basis tuples
        self.complete = complete

    def dims(self, member):
        return [len(rows) for rows in member]

    def __len__(self):
        return len(self.members)


def _canon(bases, dims, p):
    out = []
    for i, rows in enumerate(bases):
        if not rows:
            out.append(())
            continue
        red, pivots = rref(Mat.from_rows([list(r) for r in rows], p))
        out.append(tuple(tuple(red.row(k)) for k in range(len(pivots))))
    return tuple(out)


def _spin(V, element):
    """Smallest subrepresentation containing the given module element."""
    A = V.algebra
    p = V.p
    ech = [dict() for _ in range(A.n)]  # pivot -> reduced row

    def insert(i, vec):
        vec = list(vec)
        for piv, row in ech[i].items():
            c = vec[piv]
            if c:
                vec = [(a - c * b) % p for a, b in zip(vec, row)]
        piv = next((k for k, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        inv = pow(vec[piv], -1, p)
        ech[i][piv] = [x * inv % p for x in vec]
        return True

    queue = []
    for i in range(A.n):
        vec = element[i]
        if any(vec) and insert(i, vec):
            queue.append((i, list(vec)))
    while queue:
        i, vec = queue.pop()
        for gid, g in enumerate(A.gens):
            if g.src != i:
                continue
            img = V.mats[gid].matvec(vec)
            if any(img) and insert(g.tgt, img):
                queue.append((g.tgt, img))
    return _canon(
        [list(ech[i].values()) for i in range(A.n)], V.dims, p
    )


def _join(V, a, b):
    rows = [list(x) + list(y) for x, y in zip(a, b)]
    return _canon(rows, V.dims, V.p)


def submodules(V, config=None):
    """All subrepresentations of a small module over a prime field."""
    cfg = dict(DEFAULT_CONFIG, **(config or {}))
    if V.p is None:
        raise ValueError("submodule enumeration needs a prime field")
    p = V.p
    total = V.total_dim()
    if total > cfg["dim_cap"]:
        raise ValueError(f"total dimension {total} exceeds cap {cfg['dim_cap']}")
    zero = tuple(() for _ in range(V.algebra.n))
    members = {zero}
    # projectivized vectors of the total space: first nonzero coordinate 1
    count = 0
    complete = True
    positions = []
    for i in range(V.algebra.n):
        positions.extend((i, k) for k in range(V.dims[i]))

    def vectors():
        for lead in range(total):
            tail = total - lead - 1
            for code in range(p**tail):
                flat = [0] * total
                flat[lead] = 1
                c = code
                for j in range(lead + 1, total):
                    flat[j] = c % p
                    c //= p
                yield flat

    for flat in vectors():
        count += 1
        if count > cfg["enum_cap"]:
            complete = False
            break
        element = []
        pos = 0
        for i in range(V.algebra.n):
            element.append(flat[pos : pos + V.dims[i]])
            pos += V.dims[i]
        members.add(_spin(V, element))
    # close under sums
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                j = _join(V, a, b)
                if j not in members:
                    members.add(j)
                    nxt.append(j)
        frontier = nxt
        if len(members) > cfg["enum_cap"]:
            complete = False
            break
    return SubmoduleLattice(V, sorted(members), complete)


# ---------------------------------------------------------------------------
# stability verdicts


def _reduce_rep(V, p):
    mats = {gid: m.to_fp(p) for gid, m in V.mats.items()}
    return R.Rep(V.algebra, V.dims, mats, p)


def _check_one_field(V, theta, cfg, strict):
    if theta.value(V.dims) != 0:
        return {"verdict": False, "reason": "weight of the module is nonzero"}
    lattice = submodules(V, cfg)
    if not lattice.complete:
        return {"verdict": "unknown (cap)", "reason": "lattice incomplete"}
    for member in lattice.members:
        dims = lattice.dims(member)
        if sum(dims) == 0 or dims == V.dims:
            continue
        val = theta.value(dims)
        if val > 0 or (strict and val == 0):
            return {
                "verdict": False,
                "witness": {
                    "dims": dims,
                    "value": str(val),
                    "bases": [[list(r) for r in rows] for rows in member],
                },
            }
    return {"verdict": True}


def is_semistable(V, theta, config=None):
    return _stability_verdict(V, theta, config, strict=False)


def is_stable(V, theta, config=None):
    return _stability_verdict(V, theta, config, strict=True)


def _stability_verdict(V, theta, config, strict):
    cfg = dict(DEFAULT_CONFIG, **(config or {}))
    if V.p is not None:
        out = _check_one_field(V, theta, cfg, strict)
        out["field"] = V.p
        out["strict"] = strict
        return out
    results = {}
    verdict = True
    for p in cfg["primes"]:
        res = _check_one_field(_reduce_rep(V, p), theta, cfg, strict)
        results[p] = res
        if res["verdict"] is not True:
            verdict = res["verdict"]
    return {
        "verdict": verdict,
        "strict": strict,
        "label": "finite-field certified",
        "fields": sorted(results),
        "per_field": results,
    }


def regular_tau_rigid_check(quiver, v, seed=0, config=None):
    """Check the rigid module of a regular real root for defect
    semistability and periodicity of its class."""
    if all(x == 0 for x in v):
        return {"accepted": False, "reason": "zero vector"}
    if quiver.defect(v) != 0:
        return {"accepted": False, "reason": "nonzero defect"}
    if not quiver.is_positive_real_root(v):
        return {"accepted": False, "reason": "not a positive real root"}
    cfg = dict(DEFAULT_CONFIG, **(config or {}))
    W = rigid_of_rank(quiver, v, seed=seed)
    theta = defect_weight(quiver)
    semi = is_semistable(W, theta, cfg)
    # periodicity of the class under the Coxeter transformation
    phi = quiver.coxeter_transformation()
    period = None
    cur = list(v)
    for k in range(1, 25):
        cur = quiver.coxeter_apply(cur, phi)
        if cur == list(v):
            period = k
            break
    return {
        "accepted": True,
        "rank": list(v),
        "semistable": semi["verdict"],
        "evidence": semi,
        "coxeter_period": period,
        "seed": seed,
    }
