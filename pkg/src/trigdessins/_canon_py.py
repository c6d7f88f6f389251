"""Pure-Python canonical-code kernel (reference implementation).

The compiled kernel in ``_canon.pyx`` must produce byte-identical results;
``_kernel`` picks whichever is available (``TRIGDESSINS_PURE=1`` forces this
one).

A rooted code fixes a root dart and breadth-first indexes darts: pop indexed
darts in order; the first dart popped at each unseen vertex freezes that
vertex's record, namely ``-degree`` followed, per rotation dart ``e``, by the
index of ``twin(e)`` (indexing ``e`` then ``twin(e)`` on first sight), the
label ints of ``e``, and its boundary flag.  Isolated vertices append
``(face key, sorted labels)`` records keyed by the least index on their face.
The canonical code is the least rooted code over all boundary roots.
"""

IMPLEMENTATION = "python"


def _rooted_code(n, twin, nxt, vtx, nv, deg, labels_flat, arity, bflag, root, iso_groups):
    idx = [-1] * n
    idx[root] = 0
    nfree = 1
    order = [root]
    vdone = [False] * nv
    out = []
    qi = 0
    while qi < len(order):
        d = order[qi]
        qi += 1
        v = vtx[d]
        if vdone[v]:
            continue
        vdone[v] = True
        out.append(-deg[v])
        e = d
        while True:
            if idx[e] < 0:
                idx[e] = nfree
                nfree += 1
                order.append(e)
            t = twin[e]
            if idx[t] < 0:
                idx[t] = nfree
                nfree += 1
                order.append(t)
            out.append(idx[t])
            if arity:
                base = e * arity
                out.extend(labels_flat[base:base + arity])
            out.append(bflag[e])
            e = nxt[e]
            if e == d:
                break
    main = tuple(out)
    if not iso_groups:
        return (main, ())
    iso_out = []
    for face_darts, lab in iso_groups:
        key = min(idx[fd] for fd in face_darts)
        iso_out.append((key, lab))
    iso_out.sort()
    return (main, tuple(iso_out))


def best_boundary_code(n, twin, nxt, vtx, nv, deg, labels_flat, arity, bflag, roots, iso_groups):
    best = None
    for root in roots:
        cand = _rooted_code(
            n, twin, nxt, vtx, nv, deg, labels_flat, arity, bflag, root, iso_groups
        )
        if best is None or cand < best:
            best = cand
    return best
