"""Closed forms printed for the elliptic strip 0 < y < b and the mixed strip
-a < y < a, transcribed as sympy strings."""

ELLIPTIC_P = [
    "(b-y)/b",
    "y/(6*b)*(y**3-2*b*y**2+b**3)",
    "y/(210*b)*(-10*y**6+28*b*y**5-35*b**3*y**3+17*b**6)",
    "y/(252*b)*(4*y**9-14*b*y**8+30*b**3*y**6-51*b**6*y**3+31*b**9)",
    "y/(54054*b)*(-308*y**12+1274*b*y**11-4004*b**3*y**9+14586*b**6*y**6-31031*b**9*y**3+19483*b**12)",
    "y/(36036*b)*(77*y**15-364*b*y**14+1540*b**3*y**12-9724*b**6*y**9+44330*b**9*y**6"
    "-97415*b**12*y**3+61556*b**15)",
]

ELLIPTIC_Q = [
    "y/b",
    "y/(6*b)*(b**3-y**3)",
    "y/(42*b)*(2*y**6-7*b**3*y**3+5*b**6)",
    "y/(252*b)*(-4*y**9+30*b**3*y**6-75*b**6*y**3+49*b**9)",
    "y/(4914*b)*(28*y**12-364*b**3*y**9+1950*b**6*y**6-4459*b**9*y**3+2845*b**12)",
    "y/(3276*b)*(-7*y**15+140*b**3*y**12-1300*b**6*y**9+6370*b**9*y**6-14225*b**12*y**3+9022*b**15)",
]

ELLIPTIC_U = [
    "(b-y)/b",
    "x*(b-y)/b",
    "1/(6*b)*(-6*x**2*y+6*x**2*b+y**4-2*b*y**3+b**3*y)",
    "x/(2*b)*(-2*x**2*y+2*x**2*b+y**4-2*b*y**3+b**3*y)",
    "1/(210*b)*(-210*x**4*y+210*x**4*b+210*x**2*y**4-420*x**2*y**3*b+210*x**2*y*b**3"
    "-10*y**7+28*b*y**6-35*b**3*y**4+17*b**6*y)",
    "x/(42*b)*(-42*x**4*y+42*x**4*b+70*x**2*y**4-140*x**2*y**3*b+70*x**2*y*b**3"
    "-10*y**7+28*b*y**6-35*b**3*y**4+17*b**6*y)",
]

ELLIPTIC_V = [
    "y/b",
    "x*y/b",
    "y/(6*b)*(6*x**2-y**3+b**3)",
    "x*y/(2*b)*(2*x**2-y**3+b**3)",
    "y/(42*b)*(42*x**4-42*x**2*y**3+42*x**2*b**3+2*y**6-7*b**3*y**3+5*b**6)",
    "x*y/(42*b)*(42*x**4-70*x**2*y**3+70*x**2*b**3+10*y**6-35*b**3*y**3+25*b**6)",
]

MIXED_P = [
    "(a-y)/(2*a)",
    "1/(12*a)*(y**4-2*a*y**3+2*a**3*y-a**4)",
    "1/(210*a)*(-5*y**7+14*a*y**6-35*a**3*y**4+35*a**4*y**3-30*a**6*y+21*a**7)",
    "1/(252*a)*(2*y**10-7*a*y**9+30*a**3*y**7-42*a**4*y**6+90*a**6*y**4-126*a**7*y**3"
    "+103*a**9*y-50*a**10)",
]

MIXED_U = [
    "(a-y)/(2*a)",
    "x*(a-y)/(2*a)",
    "1/(12*a)*(-6*x**2*y+6*a*x**2+y**4-2*a*y**3+2*a**3*y-a**4)",
    "x/(4*a)*(-2*x**2*y+2*a*x**2+y**4-2*a*y**3+2*a**3*y-a**4)",
]

# worked example: y u_xx + u_yy = 2x^2y^3 - 18x^3y^4 with zero boundary data
EXAMPLE_RHS = "2*x**2*y**3-18*x**3*y**4"
EXAMPLE_PARTICULAR = "-3*x**3*y**6/5+x**2*y**5/10+x*y**9/20-y**8/280"
ELLIPTIC_EXAMPLE = ("y/840*(-504*x**3*y**5+504*b**5*x**3+84*x**2*y**4-84*b**4*x**2+42*x*y**8"
                    "-252*b**5*x*y**3+210*b**8*x-3*y**7+14*b**4*y**3-11*b**7)")
MIXED_EXAMPLE = ("-3*x**3*y**6/5+3*a**6*x**3/5+x**2*y**5/10-a**4*x**2*y/10+x*y**9/20"
                 "-3*a**6*x*y**3/5+11*a**8*x*y/20-y**8/280+a**4*y**4/60-11*a**8/840")
