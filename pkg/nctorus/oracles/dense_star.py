import cmath
from nctorus.algebra import TorusElement
from nctorus.exceptions import ThetaMismatchError


def dense_star_oracle(a: TorusElement, b: TorusElement) -> TorusElement:
    """
    Reference twisted convolution: a plain double loop over support pairs, Σ_{r+s=p} â(r) b̂(s) e^{-πi r·Θs}.
    """
    if a.theta != b.theta:
        raise ThetaMismatchError('dense_star_oracle needs operands over the same Θ')
    theta = a.theta.entries
    n = a.theta.n
    result = {}
    for r, a_r in a.coeffs.items():
        for s, b_s in b.coeffs.items():
            form = 0.0
            for i in range(n):
                for j in range(n):
                    form += r[i] * theta[i][j] * s[j]
            p = tuple(r[i] + s[i] for i in range(n))
            result[p] = result.get(p, 0j) + a_r * b_s * cmath.exp(-1j * cmath.pi * form)
    return TorusElement(theta=a.theta, coeffs=result)
