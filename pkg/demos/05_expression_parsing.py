"""The F(s) expression language: parsing, classification, canonical text.

Inputs are classified as rational, fractional-sum (pole atoms), table
candidates (tabulated shapes that are neither), or unsupported -- the last
with a reason, since transforms with essential singularities have no finite
pole structure for the analytic methods to use.
"""

from nablainv import UnsupportedExpressionError, classify, parse_expression, pretty

SAMPLES = [
    "9/((s+1)^2*(s-2))",
    "1/(s^0.5-0.2) - s^0.2/(s^0.7-0.3)",
    "1/s^1.5",
    "1/(1-0.5+0.5*s)^1.5",
    "0.5*s^-0.5*(1-s)/(s^0.5-0.3)^2",
    "(s^2+1)^0.5",
    "s^(10/7)",
]

for text in SAMPLES:
    ast = parse_expression(text)
    cls = classify(ast)
    print(f"input      : {text}")
    print(f"canonical  : {pretty(ast)}")
    line = f"class      : {cls.kind.value}"
    if cls.reason:
        line += f"  ({cls.reason.split(':')[0]})"
    print(line)
    if cls.fractional:
        for atom in cls.fractional.atoms:
            print(f"             atom coeff={atom.coefficient:.3g} alpha={atom.alpha:.3g} "
                  f"beta={atom.beta:.3g} lambda={atom.lam:.3g}")
    print()

print("constructs that are rejected outright, with the documented diagnostic:")
for text in ("1/(e^s-0.5)", "1/(exp(s)-0.5)", "sin(s)"):
    try:
        parse_expression(text)
    except UnsupportedExpressionError as err:
        print(f"  {text:<18} -> {str(err)[:66]}...")

print()
print("the same surface is available on the command line:")
print("  nablainv invert --expr '9/((s+1)^2*(s-2))' --k 1..10 --format csv")
print("  nablainv verify --expr '1/(s-0.3)' --k 1..10")
print("  nablainv table  --match '1/(1-0.5+0.5*s)'")
print("  nablainv roundtrip")
