"""Hand-recorded reference data for small cases, used by the verify suites."""

# right weak order on S4: element -> simple inversions (1-based), with the
# Hasse edges listed separately
S4_LABELS = {
    "1234": (),
    "1243": (3,),
    "1324": (2,),
    "2134": (1,),
    "1423": (3,),
    "1342": (2,),
    "2143": (1, 3),
    "3124": (2,),
    "2314": (1,),
    "1432": (2, 3),
    "4123": (3,),
    "2413": (1, 3),
    "3142": (2,),
    "3214": (1, 2),
    "2341": (1,),
    "4132": (2, 3),
    "4213": (1, 3),
    "3412": (2,),
    "2431": (1, 3),
    "3241": (1, 2),
    "4312": (2, 3),
    "4231": (1, 3),
    "3421": (1, 2),
    "4321": (1, 2, 3),
}

S4_WEAK_EDGES = frozenset(
    {
        ("1234", "1243"), ("1234", "1324"), ("1234", "2134"),
        ("1243", "1423"), ("1243", "2143"),
        ("1324", "1342"), ("1324", "3124"),
        ("2134", "2143"), ("2134", "2314"),
        ("1423", "1432"), ("1423", "4123"),
        ("1342", "1432"), ("1342", "3142"),
        ("2143", "2413"),
        ("3124", "3142"), ("3124", "3214"),
        ("2314", "3214"), ("2314", "2341"),
        ("1432", "4132"),
        ("4123", "4132"), ("4123", "4213"),
        ("2413", "4213"), ("2413", "2431"),
        ("3142", "3412"),
        ("3214", "3241"),
        ("2341", "2431"), ("2341", "3241"),
        ("4132", "4312"),
        ("4213", "4231"),
        ("3412", "4312"), ("3412", "3421"),
        ("2431", "4231"),
        ("3241", "3421"),
        ("4312", "4321"), ("4231", "4321"), ("3421", "4321"),
    }
)  # fmt: skip

# elements of S4 with I(w) inside the root subsystem of N_Delta(w)
S4_TORAL = frozenset({"1234", "2134", "1324", "1243", "1432", "2143", "3214", "4321"})

S4_NONSMOOTH = frozenset({"4231", "3412"})

# N(4231) in A3, as simple-root coordinate vectors
N_4231 = frozenset({(1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)})
