#!/usr/bin/env python3
"""Regenerate data/us_states.csv from the R `datasets` state.center / state.area values.

Half-extents are derived from the square root of the state area, with the
longitude extent corrected by cos(latitude) so that neighbouring states overlap.
"""
import math
import sys

STATES = [
    ("Alabama", -86.7509, 32.5901, 51609),
    ("Alaska", -127.25, 49.25, 589757),
    ("Arizona", -111.625, 34.2192, 113909),
    ("Arkansas", -92.2992, 34.7336, 53104),
    ("California", -119.773, 36.5341, 158693),
    ("Colorado", -105.513, 38.6777, 104247),
    ("Connecticut", -72.3573, 41.5928, 5009),
    ("Delaware", -74.9841, 38.6777, 2057),
    ("Florida", -81.685, 27.8744, 58560),
    ("Georgia", -83.3736, 32.3329, 58876),
    ("Hawaii", -126.25, 31.75, 6450),
    ("Idaho", -113.93, 43.5648, 83557),
    ("Illinois", -89.3776, 40.0495, 56400),
    ("Indiana", -86.0808, 40.0495, 36291),
    ("Iowa", -93.3714, 41.9358, 56290),
    ("Kansas", -98.1156, 38.4204, 82264),
    ("Kentucky", -84.7674, 37.3915, 40395),
    ("Louisiana", -92.2724, 30.6181, 48523),
    ("Maine", -68.9801, 45.6226, 33215),
    ("Maryland", -76.6459, 39.2778, 10577),
    ("Massachusetts", -71.58, 42.3645, 8257),
    ("Michigan", -84.687, 43.1361, 58216),
    ("Minnesota", -94.6043, 46.3943, 84068),
    ("Mississippi", -89.8065, 32.6758, 47716),
    ("Missouri", -92.5137, 38.3347, 69686),
    ("Montana", -109.32, 46.823, 147138),
    ("Nebraska", -99.5898, 41.3356, 77227),
    ("Nevada", -116.851, 39.1063, 110540),
    ("New Hampshire", -71.3924, 43.3934, 9304),
    ("New Jersey", -74.2336, 39.9637, 7836),
    ("New Mexico", -105.942, 34.4764, 121666),
    ("New York", -75.1449, 43.1361, 49576),
    ("North Carolina", -78.4686, 35.4195, 52586),
    ("North Dakota", -100.099, 47.2517, 70665),
    ("Ohio", -82.5963, 40.221, 41222),
    ("Oklahoma", -97.1239, 35.5053, 69919),
    ("Oregon", -120.068, 43.9078, 96981),
    ("Pennsylvania", -77.45, 40.9069, 45333),
    ("Rhode Island", -71.1244, 41.5928, 1214),
    ("South Carolina", -80.5056, 33.619, 31055),
    ("South Dakota", -99.7238, 44.3365, 77047),
    ("Tennessee", -86.456, 35.6767, 42244),
    ("Texas", -98.7857, 31.3897, 267339),
    ("Utah", -111.33, 39.1063, 84916),
    ("Vermont", -72.545, 44.2508, 9609),
    ("Virginia", -78.2005, 37.563, 40815),
    ("Washington", -119.746, 47.4231, 68192),
    ("West Virginia", -80.6665, 38.4204, 24181),
    ("Wisconsin", -89.9941, 44.5937, 56154),
    ("Wyoming", -107.256, 43.0504, 97914),
]


def main(out):
    out.write("x,y,dx,dy,z,name\n")
    for name, x, y, area in STATES:
        side = math.sqrt(area)
        dx = side / 2 / (0.7 * 60 * math.cos(y * math.pi / 180))
        dy = side / 2 / (0.7 * 60)
        out.write(f"{x!r},{y!r},{dx!r},{dy!r},{side!r},{name}\n")


if __name__ == "__main__":
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            main(f)
    else:
        main(sys.stdout)
