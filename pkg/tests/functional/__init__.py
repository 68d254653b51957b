from collections import OrderedDict

config = {}

#: Family name -> (spec, interval) run by the acceptance suite.
ACCEPTANCE = OrderedDict(
    [
        ("FI", ({"family": "FI"}, (0, 4))),
        ("FI_gamma", ({"family": "FI_gamma", "gamma": "cyclic:2"}, (0, 4))),
        ("OI_gamma", ({"family": "OI_gamma", "gamma": "cyclic:2"}, (0, 4))),
        ("FI_d", ({"family": "FI_d", "d": 2}, (0, 4))),
        ("OI_d", ({"family": "OI_d", "d": 2}, (0, 4))),
        ("FS_gamma_op", ({"family": "FS_gamma_op", "gamma": "trivial"}, (1, 4))),
        ("OS_gamma_op", ({"family": "OS_gamma_op", "gamma": "trivial"}, (1, 4))),
        ("VI", ({"family": "VI", "q": 2}, (0, 3))),
    ]
)
