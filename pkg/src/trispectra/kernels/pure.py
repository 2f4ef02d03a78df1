"""Pure-Python verification kernels.

Same signatures and witness conventions as the compiled module
(`trispectra.kernels._core`); all loops run in the same order so both
backends report identical first witnesses.  Tables arrive as 2-d index
arrays (anything convertible to nested lists); structure maps as 1-d.
"""

from __future__ import annotations

BACKEND = "pure"


def _rows(table):
    tolist = getattr(table, "tolist", None)
    return tolist() if tolist is not None else [list(r) for r in table]


def _vec(table):
    tolist = getattr(table, "tolist", None)
    return tolist() if tolist is not None else list(table)


def group_table_failure(add):
    """First abelian-group law broken by an addition table, or None.

    Identity is required to sit at index 0.
    """
    a = _rows(add)
    n = len(a)
    for x in range(n):
        if a[0][x] != x or a[x][0] != x:
            return ("add-identity", x)
    for x in range(n):
        row = a[x]
        for y in range(x + 1, n):
            if row[y] != a[y][x]:
                return ("add-commutativity", x, y)
    for x in range(n):
        row = a[x]
        for y in range(n):
            xy = row[y]
            ayz = a[y]
            axy = a[xy]
            for z in range(n):
                if axy[z] != row[ayz[z]]:
                    return ("add-associativity", x, y, z)
    for x in range(n):
        row = a[x]
        if not any(row[y] == 0 for y in range(n)):
            return ("add-inverse", x)
    return None


def monoid_table_failure(mul, one):
    """First commutative-monoid law broken by a multiplication table, or None."""
    m = _rows(mul)
    n = len(m)
    one = int(one)
    for x in range(n):
        if m[one][x] != x or m[x][one] != x:
            return ("mul-identity", x)
    for x in range(n):
        row = m[x]
        for y in range(x + 1, n):
            if row[y] != m[y][x]:
                return ("mul-commutativity", x, y)
    for x in range(n):
        row = m[x]
        for y in range(n):
            xy = row[y]
            myz = m[y]
            mxy = m[xy]
            for z in range(n):
                if mxy[z] != row[myz[z]]:
                    return ("mul-associativity", x, y, z)
    return None


def distrib_failure(add, mul):
    """First (a, b, c) with a(b+c) != ab+ac or (a+b)c != ac+bc, or None."""
    ad = _rows(add)
    mu = _rows(mul)
    n = len(ad)
    for x in range(n):
        mrow = mu[x]
        for y in range(n):
            arow = ad[y]
            for z in range(n):
                if mrow[arow[z]] != ad[mrow[y]][mrow[z]]:
                    return ("distributivity", x, y, z)
                if mu[ad[x][y]][z] != ad[mu[x][z]][mu[y][z]]:
                    return ("distributivity", x, y, z)
    return None


def assembled_assoc_failure(mul0, add1, sharp, lam, rho):
    """First non-associative triple of the assembled graded product, or None.

    Elements are component pairs (e, o); the product is
    (xe, xo)(ye, yo) = (xe*ye, lam[xe]#yo + xo#rho[ye]).
    """
    m0 = _rows(mul0)
    a1 = _rows(add1)
    sh = _rows(sharp)
    lm = _vec(lam)
    rh = _vec(rho)
    n0 = len(m0)
    n1 = len(sh)
    for xe in range(n0):
        lam_xe = lm[xe]
        m0_xe = m0[xe]
        for xo in range(n1):
            sh_xo = sh[xo]
            for ye in range(n0):
                rho_ye = rh[ye]
                xye = m0_xe[ye]
                m0_xye = m0[xye]
                lam_xye = lm[xye]
                m0_ye = m0[ye]
                lam_ye = lm[ye]
                for yo in range(n1):
                    xyo = a1[sh[lam_xe][yo]][sh_xo[rho_ye]]
                    sh_xyo = sh[xyo]
                    sh_lam_xye = sh[lam_xye]
                    sh_yo = sh[yo]
                    for ze in range(n0):
                        rho_ze = rh[ze]
                        yze = m0_ye[ze]
                        for zo in range(n1):
                            # (xy)z
                            le = m0_xye[ze]
                            lo = a1[sh_lam_xye[zo]][sh_xyo[rho_ze]]
                            # x(yz)
                            yzo = a1[sh[lam_ye][zo]][sh_yo[rho_ze]]
                            re = m0_xe[yze]
                            ro = a1[sh[lam_xe][yzo]][sh_xo[rh[yze]]]
                            if le != re or lo != ro:
                                return ("associativity", xe, xo, ye, yo, ze, zo)
    return None


def assembled_distrib_failure(add0, mul0, add1, sharp, lam, rho):
    """First distributivity failure of the assembled product, or None."""
    a0 = _rows(add0)
    m0 = _rows(mul0)
    a1 = _rows(add1)
    sh = _rows(sharp)
    lm = _vec(lam)
    rh = _vec(rho)
    n0 = len(m0)
    n1 = len(sh)

    def prod(xe, xo, ye, yo):
        return m0[xe][ye], a1[sh[lm[xe]][yo]][sh[xo][rh[ye]]]

    def add(xe, xo, ye, yo):
        return a0[xe][ye], a1[xo][yo]

    for xe in range(n0):
        for xo in range(n1):
            for ye in range(n0):
                for yo in range(n1):
                    se, so = add(xe, xo, ye, yo)
                    for ze in range(n0):
                        for zo in range(n1):
                            # (x+y)z = xz + yz
                            le = prod(se, so, ze, zo)
                            re = add(*prod(xe, xo, ze, zo), *prod(ye, yo, ze, zo))
                            if le != re:
                                return ("distributivity", xe, xo, ye, yo, ze, zo)
                            # z(x+y) = zx + zy
                            lf = prod(ze, zo, se, so)
                            rf = add(*prod(ze, zo, xe, xo), *prod(ze, zo, ye, yo))
                            if lf != rf:
                                return ("distributivity", xe, xo, ye, yo, ze, zo)
    return None


def triassoc_failure(mul0, add1, sharp, lam, rho):
    """First failure of x(a#b) = (xa)#b or (a#b)x = a#(bx), or None.

    x ranges over all pairs, a and b over the odd component.  A mixed
    product with a nonzero even part counts as a failure of the law it
    blocks.
    """
    m0 = _rows(mul0)
    a1 = _rows(add1)
    sh = _rows(sharp)
    lm = _vec(lam)
    rh = _vec(rho)
    n0 = len(m0)
    n1 = len(sh)
    rh0 = rh[0]
    lm0 = lm[0]
    for xe in range(n0):
        lam_xe = lm[xe]
        rho_xe = rh[xe]
        e_xa = m0[xe][0]  # even part of x*(odd), and of (odd)*x via m0[0][xe]
        e_ax = m0[0][xe]
        for xo in range(n1):
            # x * (0, a) = (e_xa, lam[xe]#a + xo#rho[0])
            t_x = sh[xo][rh0]
            # (0, a) * x = (e_ax, lam[0]#xo + a#rho[xe])
            t_0x = sh[lm0][xo]
            for a in range(n1):
                xa_o = a1[sh[lam_xe][a]][t_x]
                ax_o = a1[t_0x][sh[a][rho_xe]]
                sh_xa = sh[xa_o]
                for b in range(n1):
                    ab = sh[a][b]
                    # left law: x(a#b) vs (xa)#b
                    le = m0[xe][0]
                    lo = a1[sh[lam_xe][ab]][t_x]
                    if e_xa != 0 or le != 0 or lo != sh_xa[b]:
                        return ("triassociativity-left", xe, xo, a, b)
                    # right law: (a#b)x vs a#(bx)
                    re = m0[0][xe]
                    ro = a1[t_0x][sh[ab][rho_xe]]
                    bx_o = a1[t_0x][sh[b][rho_xe]]
                    if e_ax != 0 or re != 0 or ro != sh[a][bx_o]:
                        return ("triassociativity-right", xe, xo, a, b)
    return None


def sharp_product_compat_failure(mul0, add1, sharp, lam, rho):
    """First failure of (xa)#(yb) = (xy)(a#b) or (ax)#(by) = (a#b)xy, or None."""
    m0 = _rows(mul0)
    a1 = _rows(add1)
    sh = _rows(sharp)
    lm = _vec(lam)
    rh = _vec(rho)
    n0 = len(m0)
    n1 = len(sh)
    rh0 = rh[0]
    lm0 = lm[0]
    for xe in range(n0):
        lam_xe = lm[xe]
        rho_xe = rh[xe]
        m0_xe = m0[xe]
        for xo in range(n1):
            t_x = sh[xo][rh0]
            t_0x = sh[lm0][xo]
            for ye in range(n0):
                rho_ye = rh[ye]
                lam_ye = lm[ye]
                xye = m0_xe[ye]
                lam_xye = lm[xye]
                rho_xye = rh[xye]
                m0_0ye = m0[0][ye]
                for yo in range(n1):
                    t_y = sh[yo][rh0]
                    t_0y = sh[lm0][yo]
                    # odd part of xy
                    xyo = a1[sh[lam_xe][yo]][sh[xo][rho_ye]]
                    t_xy = sh[xyo][rh0]
                    t_0xy = sh[lm0][xyo]
                    for a in range(n1):
                        xa = a1[sh[lam_xe][a]][t_x]
                        ax = a1[t_0x][sh[a][rho_xe]]
                        sh_xa = sh[xa]
                        sh_a = sh[a]
                        for b in range(n1):
                            yb = a1[sh[lam_ye][b]][t_y]
                            lhs1 = sh_xa[yb]
                            rhs1 = a1[sh[lam_xye][sh_a[b]]][t_xy]
                            if m0_xe[0] != 0 or m0[ye][0] != 0 or m0[xye][0] != 0:
                                return ("product-compat-left", xe, xo, ye, yo, a, b)
                            if lhs1 != rhs1:
                                return ("product-compat-left", xe, xo, ye, yo, a, b)
                            by = a1[t_0y][sh[b][rho_ye]]
                            lhs2 = sh[ax][by]
                            rhs2 = a1[t_0xy][sh[sh_a[b]][rho_xye]]
                            if m0[0][xe] != 0 or m0_0ye != 0 or m0[0][xye] != 0:
                                return ("product-compat-right", xe, xo, ye, yo, a, b)
                            if lhs2 != rhs2:
                                return ("product-compat-right", xe, xo, ye, yo, a, b)
    return None
