# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled verification kernels.

Mirrors `trispectra.kernels.pure` exactly: same signatures, same loop
order, same first-witness results.  Tables are int64 2-d arrays, maps
int64 1-d arrays.
"""

BACKEND = "compiled"


def group_table_failure(const long long[:, ::1] add):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t x, y, z
    cdef long long xy
    cdef bint found
    for x in range(n):
        if add[0, x] != x or add[x, 0] != x:
            return ("add-identity", x)
    for x in range(n):
        for y in range(x + 1, n):
            if add[x, y] != add[y, x]:
                return ("add-commutativity", x, y)
    for x in range(n):
        for y in range(n):
            xy = add[x, y]
            for z in range(n):
                if add[xy, z] != add[x, add[y, z]]:
                    return ("add-associativity", x, y, z)
    for x in range(n):
        found = False
        for y in range(n):
            if add[x, y] == 0:
                found = True
                break
        if not found:
            return ("add-inverse", x)
    return None


def monoid_table_failure(const long long[:, ::1] mul, long long one):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t x, y, z
    cdef long long xy
    for x in range(n):
        if mul[one, x] != x or mul[x, one] != x:
            return ("mul-identity", x)
    for x in range(n):
        for y in range(x + 1, n):
            if mul[x, y] != mul[y, x]:
                return ("mul-commutativity", x, y)
    for x in range(n):
        for y in range(n):
            xy = mul[x, y]
            for z in range(n):
                if mul[xy, z] != mul[x, mul[y, z]]:
                    return ("mul-associativity", x, y, z)
    return None


def distrib_failure(const long long[:, ::1] add, const long long[:, ::1] mul):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mul[x, add[y, z]] != add[mul[x, y], mul[x, z]]:
                    return ("distributivity", x, y, z)
                if mul[add[x, y], z] != add[mul[x, z], mul[y, z]]:
                    return ("distributivity", x, y, z)
    return None


def assembled_assoc_failure(const long long[:, ::1] mul0,
                            const long long[:, ::1] add1,
                            const long long[:, ::1] sharp,
                            const long long[::1] lam,
                            const long long[::1] rho):
    cdef Py_ssize_t n0 = mul0.shape[0]
    cdef Py_ssize_t n1 = sharp.shape[0]
    cdef Py_ssize_t xe, xo, ye, yo, ze, zo
    cdef long long lam_xe, rho_ye, xye, lam_xye, lam_ye, xyo, yze, yzo
    cdef long long le, lo, re, ro, rho_ze
    for xe in range(n0):
        lam_xe = lam[xe]
        for xo in range(n1):
            for ye in range(n0):
                rho_ye = rho[ye]
                xye = mul0[xe, ye]
                lam_xye = lam[xye]
                lam_ye = lam[ye]
                for yo in range(n1):
                    xyo = add1[sharp[lam_xe, yo], sharp[xo, rho_ye]]
                    for ze in range(n0):
                        rho_ze = rho[ze]
                        yze = mul0[ye, ze]
                        for zo in range(n1):
                            le = mul0[xye, ze]
                            lo = add1[sharp[lam_xye, zo], sharp[xyo, rho_ze]]
                            yzo = add1[sharp[lam_ye, zo], sharp[yo, rho_ze]]
                            re = mul0[xe, yze]
                            ro = add1[sharp[lam_xe, yzo], sharp[xo, rho[yze]]]
                            if le != re or lo != ro:
                                return ("associativity", xe, xo, ye, yo, ze, zo)
    return None


def assembled_distrib_failure(const long long[:, ::1] add0,
                              const long long[:, ::1] mul0,
                              const long long[:, ::1] add1,
                              const long long[:, ::1] sharp,
                              const long long[::1] lam,
                              const long long[::1] rho):
    cdef Py_ssize_t n0 = mul0.shape[0]
    cdef Py_ssize_t n1 = sharp.shape[0]
    cdef Py_ssize_t xe, xo, ye, yo, ze, zo
    cdef long long se, so
    cdef long long p1e, p1o, p2e, p2o, p3e, p3o
    for xe in range(n0):
        for xo in range(n1):
            for ye in range(n0):
                for yo in range(n1):
                    se = add0[xe, ye]
                    so = add1[xo, yo]
                    for ze in range(n0):
                        for zo in range(n1):
                            # (x+y)z = xz + yz
                            p1e = mul0[se, ze]
                            p1o = add1[sharp[lam[se], zo], sharp[so, rho[ze]]]
                            p2e = mul0[xe, ze]
                            p2o = add1[sharp[lam[xe], zo], sharp[xo, rho[ze]]]
                            p3e = mul0[ye, ze]
                            p3o = add1[sharp[lam[ye], zo], sharp[yo, rho[ze]]]
                            if p1e != add0[p2e, p3e] or p1o != add1[p2o, p3o]:
                                return ("distributivity", xe, xo, ye, yo, ze, zo)
                            # z(x+y) = zx + zy
                            p1e = mul0[ze, se]
                            p1o = add1[sharp[lam[ze], so], sharp[zo, rho[se]]]
                            p2e = mul0[ze, xe]
                            p2o = add1[sharp[lam[ze], xo], sharp[zo, rho[xe]]]
                            p3e = mul0[ze, ye]
                            p3o = add1[sharp[lam[ze], yo], sharp[zo, rho[ye]]]
                            if p1e != add0[p2e, p3e] or p1o != add1[p2o, p3o]:
                                return ("distributivity", xe, xo, ye, yo, ze, zo)
    return None


def triassoc_failure(const long long[:, ::1] mul0,
                     const long long[:, ::1] add1,
                     const long long[:, ::1] sharp,
                     const long long[::1] lam,
                     const long long[::1] rho):
    cdef Py_ssize_t n0 = mul0.shape[0]
    cdef Py_ssize_t n1 = sharp.shape[0]
    cdef Py_ssize_t xe, xo, a, b
    cdef long long lam_xe, rho_xe, e_xa, e_ax, t_x, t_0x
    cdef long long xa_o, ax_o, ab, le, lo, re, ro, bx_o
    cdef long long rh0 = rho[0]
    cdef long long lm0 = lam[0]
    for xe in range(n0):
        lam_xe = lam[xe]
        rho_xe = rho[xe]
        e_xa = mul0[xe, 0]
        e_ax = mul0[0, xe]
        for xo in range(n1):
            t_x = sharp[xo, rh0]
            t_0x = sharp[lm0, xo]
            for a in range(n1):
                xa_o = add1[sharp[lam_xe, a], t_x]
                ax_o = add1[t_0x, sharp[a, rho_xe]]
                for b in range(n1):
                    ab = sharp[a, b]
                    le = mul0[xe, 0]
                    lo = add1[sharp[lam_xe, ab], t_x]
                    if e_xa != 0 or le != 0 or lo != sharp[xa_o, b]:
                        return ("triassociativity-left", xe, xo, a, b)
                    re = mul0[0, xe]
                    ro = add1[t_0x, sharp[ab, rho_xe]]
                    bx_o = add1[t_0x, sharp[b, rho_xe]]
                    if e_ax != 0 or re != 0 or ro != sharp[a, bx_o]:
                        return ("triassociativity-right", xe, xo, a, b)
    return None


def sharp_product_compat_failure(const long long[:, ::1] mul0,
                                 const long long[:, ::1] add1,
                                 const long long[:, ::1] sharp,
                                 const long long[::1] lam,
                                 const long long[::1] rho):
    cdef Py_ssize_t n0 = mul0.shape[0]
    cdef Py_ssize_t n1 = sharp.shape[0]
    cdef Py_ssize_t xe, xo, ye, yo, a, b
    cdef long long lam_xe, rho_xe, t_x, t_0x, rho_ye, lam_ye, xye
    cdef long long lam_xye, rho_xye, t_y, t_0y, xyo, t_xy, t_0xy
    cdef long long xa, ax, yb, by, lhs1, rhs1, lhs2, rhs2, ab_s
    cdef long long rh0 = rho[0]
    cdef long long lm0 = lam[0]
    for xe in range(n0):
        lam_xe = lam[xe]
        rho_xe = rho[xe]
        for xo in range(n1):
            t_x = sharp[xo, rh0]
            t_0x = sharp[lm0, xo]
            for ye in range(n0):
                rho_ye = rho[ye]
                lam_ye = lam[ye]
                xye = mul0[xe, ye]
                lam_xye = lam[xye]
                rho_xye = rho[xye]
                for yo in range(n1):
                    t_y = sharp[yo, rh0]
                    t_0y = sharp[lm0, yo]
                    xyo = add1[sharp[lam_xe, yo], sharp[xo, rho_ye]]
                    t_xy = sharp[xyo, rh0]
                    t_0xy = sharp[lm0, xyo]
                    for a in range(n1):
                        xa = add1[sharp[lam_xe, a], t_x]
                        ax = add1[t_0x, sharp[a, rho_xe]]
                        for b in range(n1):
                            ab_s = sharp[a, b]
                            yb = add1[sharp[lam_ye, b], t_y]
                            lhs1 = sharp[xa, yb]
                            rhs1 = add1[sharp[lam_xye, ab_s], t_xy]
                            if mul0[xe, 0] != 0 or mul0[ye, 0] != 0 or mul0[xye, 0] != 0:
                                return ("product-compat-left", xe, xo, ye, yo, a, b)
                            if lhs1 != rhs1:
                                return ("product-compat-left", xe, xo, ye, yo, a, b)
                            by = add1[t_0y, sharp[b, rho_ye]]
                            lhs2 = sharp[ax, by]
                            rhs2 = add1[t_0xy, sharp[ab_s, rho_xye]]
                            if mul0[0, xe] != 0 or mul0[0, ye] != 0 or mul0[0, xye] != 0:
                                return ("product-compat-right", xe, xo, ye, yo, a, b)
                            if lhs2 != rhs2:
                                return ("product-compat-right", xe, xo, ye, yo, a, b)
    return None
