"""The catalog's intended coverage: one entry per claim, grouped by section.

The registry completeness self-test compares registered ids against this
list, so silent omissions are impossible.
"""

IN_SCOPE = {
    "G": ("A.90", "A.93", "A.1", "A.62", "A.63", "A.154", "A.151", "A.111", "A.117"),
    "9.1": ("A.9.1.sym", "A.112", "A.91", "A.9.1.diag"),
    "9.2": ("A.146",),
    "9.3": ("A.92", "A.9.3.sym", "A.9.3.diag"),
    "9.4": ("A.9.4.sym", "A.9.4.diag"),
    "9.5": ("A.95", "A.30", "A.44", "A.96", "A.100", "A.45"),
    "9.6": ("A.47", "A.101", "A.98", "A.99", "A.97", "A.102", "A.2", "A.3", "A.4", "A.5"),
    "9.7": ("A.9.7.diag",),
    "9.8": ("A.60", "A.122", "A.48", "A.50", "A.58", "A.59", "A.51", "A.52",
            "A.68", "A.69", "A.70", "A.71", "A.72", "A.73", "A.74", "A.75"),
    "9.8.1": ("A.61", "A.57", "A.49", "A.65", "A.6", "A.66", "A.67", "A.103",
              "A.104", "A.105", "A.106", "A.7", "A.8", "A.56", "A.46", "A.108"),
    "9.8.2": ("A.9.8.2.VW", "A.140"),
    "9.10": ("A.9.10.gottlieb", "A.9.10.diag"),
    "9.11": ("A.9", "A.10", "A.11", "A.12", "A.13", "A.147", "A.148", "A.149",
             "A.150", "A.31", "A.32", "A.33", "A.34", "A.107"),
    "9.12": ("A.53", "A.54", "A.55", "A.14", "A.76", "A.77", "A.78", "A.79",
             "A.80", "A.81", "A.82", "A.9.12.diag"),
    "9.14": ("A.9.14.diag",),
    "9.15": ("A.9.15.diag", "A.15", "A.16", "A.17"),
    "14.1": ("A.113", "A.40", "A.41", "A.18", "A.19", "A.109"),
    "14.2": ("A.83", "A.84", "A.85", "A.86"),
    "14.3": ("A.14.3.d0",),
    "14.4": ("A.14.4.phase",),
    "14.5": ("A.123", "A.124", "A.125", "A.126", "A.138", "A.132", "A.133",
             "A.134", "A.135", "A.14.5.sym", "A.14.5.sv1", "A.14.5.sv2",
             "A.14.5.sv3", "A.14.5.sv4", "A.130", "A.131", "A.136", "A.137",
             "A.14.5.qcheb", "A.139", "A.114", "A.115", "A.116", "A.145",
             "A.144", "A.118"),
    "14.7": ("A.14.7.pos", "A.89"),
    "14.8": ("A.14.8.sym", "A.20", "A.42", "A.43", "A.21", "A.22"),
    "14.10": ("A.110",),
    "14.10.1": ("A.23", "A.24", "A.25", "A.26", "A.27"),
    "14.11": ("A.14.11.sym",),
    "14.12": ("A.127", "A.128", "A.129"),
    "14.14": ("A.152", "A.153", "A.163", "A.167", "A.169", "A.161", "A.164",
              "A.155", "A.160", "A.14.14.posq"),
    "14.16": ("A.156", "A.157", "A.168", "A.165", "A.170", "A.162", "A.166",
              "A.171", "A.172", "A.158", "A.159", "A.14.16.posq"),
    "14.17": ("A.87", "A.88"),
    "14.20": ("A.35", "A.36", "A.28", "A.29"),
    "14.21": ("A.119", "A.120", "A.121", "A.37", "A.38", "A.39"),
    "14.27": ("A.94",),
    "14.29": ("A.143",),
}


def in_scope_ids():
    out = []
    for section, ids in IN_SCOPE.items():
        for rid in ids:
            out.append((section, rid))
    return out
