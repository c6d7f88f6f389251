# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled canonical-code kernel; mirrors ``_canon_py`` exactly."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

IMPLEMENTATION = "compiled"


def best_boundary_code(int n, twin, nxt, vtx, int nv, deg, labels_flat,
                       int arity, bflag, roots, iso_groups):
    cdef int *ctwin = <int *> malloc(n * sizeof(int))
    cdef int *cnxt = <int *> malloc(n * sizeof(int))
    cdef int *cvtx = <int *> malloc(n * sizeof(int))
    cdef int *cdeg = <int *> malloc(nv * sizeof(int))
    cdef int *cbfl = <int *> malloc(n * sizeof(int))
    cdef int *clab = NULL
    cdef int *idx = <int *> malloc(n * sizeof(int))
    cdef int *order = <int *> malloc(n * sizeof(int))
    cdef char *vdone = <char *> malloc(nv)
    cdef int i, root, qi, norder, nfree, d, v, e, t, base, j
    if arity > 0:
        clab = <int *> malloc(n * arity * sizeof(int))
        for i in range(n * arity):
            clab[i] = labels_flat[i]
    for i in range(n):
        ctwin[i] = twin[i]
        cnxt[i] = nxt[i]
        cvtx[i] = vtx[i]
        cbfl[i] = bflag[i]
    for i in range(nv):
        cdeg[i] = deg[i]

    best = None
    try:
        for root in roots:
            for i in range(n):
                idx[i] = -1
            memset(vdone, 0, nv)
            idx[root] = 0
            nfree = 1
            order[0] = root
            norder = 1
            out = []
            qi = 0
            while qi < norder:
                d = order[qi]
                qi += 1
                v = cvtx[d]
                if vdone[v]:
                    continue
                vdone[v] = 1
                out.append(-cdeg[v])
                e = d
                while True:
                    if idx[e] < 0:
                        idx[e] = nfree
                        nfree += 1
                        order[norder] = e
                        norder += 1
                    t = ctwin[e]
                    if idx[t] < 0:
                        idx[t] = nfree
                        nfree += 1
                        order[norder] = t
                        norder += 1
                    out.append(idx[t])
                    if arity > 0:
                        base = e * arity
                        for j in range(arity):
                            out.append(clab[base + j])
                    out.append(cbfl[e])
                    e = cnxt[e]
                    if e == d:
                        break
            main = tuple(out)
            if iso_groups:
                iso_out = []
                for face_darts, lab in iso_groups:
                    key = n
                    for fd in face_darts:
                        i = idx[fd]
                        if i < key:
                            key = i
                    iso_out.append((key, lab))
                iso_out.sort()
                cand = (main, tuple(iso_out))
            else:
                cand = (main, ())
            if best is None or cand < best:
                best = cand
    finally:
        free(ctwin)
        free(cnxt)
        free(cvtx)
        free(cdeg)
        free(cbfl)
        if clab != NULL:
            free(clab)
        free(idx)
        free(order)
        free(vdone)
    return best
