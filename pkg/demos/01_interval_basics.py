"""A tour of the outward-rounded interval kernel.

Run:  python3 demos/01_interval_basics.py
"""

from henoncert import Box, Interval, from_decimal

# Exact endpoints stay exact
print("[1,2] + [3,4] =", Interval(1, 2) + Interval(3, 4))

# Decimal constants are NOT doubles; from_decimal gives a one-ulp enclosure
a = from_decimal("1.76")
print("enclosure of 1.76:", a, "width:", a.width())

tenth = from_decimal("0.1")
print("enclosure of 0.1:", tenth, "width:", tenth.width())

# The dedicated square avoids the dependency problem of x*x
x = Interval(-2, 1)
print("x*x  =", x * x)
print("sqr(x) =", x.sqr())

# mig/mag: inner and outer distance from zero (the covering checks live on these)
y = Interval(-0.5, 2.0)
print("mig:", y.mig(), "mag:", y.mag())

# Splitting and boxes: the subdivision machinery behind every certificate
pieces = Interval(-1, 1).split(4)
print("split [-1,1] into 4:", pieces)

B = Box.cube(-1.0, 1.0, 3)
print("the chart cube B:", B)
