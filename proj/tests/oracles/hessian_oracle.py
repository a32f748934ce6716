"""Independent sympy oracle for values frozen into the C++ tests.

Run: python3 tests/oracles/hessian_oracle.py
"""
import sympy as sp

x = sp.symbols("x0:5")
s, t = sp.symbols("s t")


def hessian_det(f, nv):
    H = sp.Matrix(nv, nv, lambda i, j: sp.diff(f, x[i], x[j]))
    return sp.expand(H.det(method="berkowitz"))


# Tangent developable of the twisted cubic (1, t, t^2, t^3).
dev = 3*x[1]**2*x[2]**2 - 4*x[0]*x[2]**3 - 4*x[1]**3*x[3] + 6*x[0]*x[1]*x[2]*x[3] - x[0]**2*x[3]**2
param = [1, t + s, t**2 + 2*s*t, t**3 + 3*s*t**2]
print("developable restricted to parameterization:",
      sp.expand(dev.subs(dict(zip(x[:4], param)), simultaneous=True)))
hdev = hessian_det(dev, 4)
print("h(developable) =", sp.factor(hdev))
q, r = sp.div(hdev, dev**2, *x[:4])
print("h / f^2 =", q, "remainder", r)

print("gradient of developable on twisted cubic:",
      [sp.simplify(sp.diff(dev, x[i]).subs({x[0]: 1, x[1]: t, x[2]: t**2, x[3]: t**3})) for i in range(4)])

fermat = sum(v**3 for v in x[:4])
print("h(fermat3) =", hessian_det(fermat, 4))

perazzo = x[0]*x[3]**2 + x[1]*x[3]*x[4] + x[2]*x[4]**2
print("h(perazzo) =", hessian_det(perazzo, 5))

cone = x[2]**2*x[3] - x[1]**3 + x[1]*x[3]**2
print("h(cone-elliptic) =", hessian_det(cone, 4))

# Cone example at P = (0,1,0,1).
P = {x[0]: 0, x[1]: 1, x[2]: 0, x[3]: 1}
print("grad cone at P:", [sp.diff(cone, v).subs(P) for v in x[:4]])
print("H cone at P:", sp.Matrix(4, 4, lambda i, j: sp.diff(cone, x[i], x[j]).subs(P)).tolist())
print("rank H cone at P:", sp.Matrix(4, 4, lambda i, j: sp.diff(cone, x[i], x[j]).subs(P)).rank())

# Developable base point (s, t) = (1, 1).
Pd = {x[0]: 1, x[1]: 2, x[2]: 3, x[3]: 4}
print("dev at (1,2,3,4):", dev.subs(Pd), "grad:", [sp.diff(dev, v).subs(Pd) for v in x[:4]])


def second_fundamental_form(f, nv, point):
    sub = dict(zip(x[:nv], point))
    g = sp.Matrix([[sp.diff(f, v).subs(sub) for v in x[:nv]]])
    W = sp.Matrix.hstack(*g.nullspace())
    H = sp.Matrix(nv, nv, lambda i, j: sp.diff(f, x[i], x[j]).subs(sub))
    gram = W.T * H * W
    radical = [W * v for v in gram.nullspace()]
    return gram.rank(), [list(v) for v in radical]


print("fermat3 at (1,2,-1,-2):", second_fundamental_form(fermat, 4, [1, 2, -1, -2]))
print("fermat3 at (1,-1,0,0):", second_fundamental_form(fermat, 4, [1, -1, 0, 0]))
print("developable at (1,2,3,4):", second_fundamental_form(dev, 4, [1, 2, 3, 4]))
print("perazzo at (1,-1,0,1,1):", second_fundamental_form(perazzo, 5, [1, -1, 0, 1, 1]))
print("(x0-x1)^2 x2 hessian:", sp.factor(hessian_det((x[0] - x[1])**2 * x[2], 3)))
cone_f = x[1]**3 + x[2]**3 + x[3]**3
print("cone over fermat cubic hessian:", hessian_det(cone_f, 4))
