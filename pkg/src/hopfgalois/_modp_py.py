"""Pure-Python mod-p kernels; same API as the compiled _modp_fast module.

Pivot policy (shared with the compiled version, and with the Fraction path
in linalg): leftmost nonzero pivot, rows scanned top-down, first nonzero row
wins.  This keeps echelon forms, kernels and solutions deterministic.
"""


def rref_modp(data, rows, cols, p):
    """Reduced row echelon form of a flat row-major int matrix mod p.

    Returns (new flat data, list of pivot column indices).
    """
    m = [data[r * cols:(r + 1) * cols] for r in range(rows)]
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        sel = -1
        for r in range(row, rows):
            if m[r][col] % p:
                sel = r
                break
        if sel < 0:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col] % p, p - 2, p)
        m[row] = [(v * inv) % p for v in m[row]]
        for r in range(rows):
            if r != row and m[r][col] % p:
                f = m[r][col] % p
                mr, mrow = m[r], m[row]
                m[r] = [(mr[j] - f * mrow[j]) % p for j in range(cols)]
        pivots.append(col)
        row += 1
    flat = []
    for r in m:
        flat.extend(v % p for v in r)
    return flat, pivots


def matmul_modp(a, ar, ac, b, br, bc, p):
    """Flat row-major product of an ar x ac and an ac x bc matrix mod p."""
    out = [0] * (ar * bc)
    for i in range(ar):
        arow = a[i * ac:(i + 1) * ac]
        orow = out
        base = i * bc
        for k in range(ac):
            aik = arow[k]
            if aik:
                boff = k * bc
                for j in range(bc):
                    orow[base + j] = (orow[base + j] + aik * b[boff + j]) % p
    return out
