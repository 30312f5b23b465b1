"""Golden CLI cases: name -> argv (paths relative to tests/data)."""

CASES = {
    "certificate_star": ["certificate", "star.bip"],
    "certificate_k33": ["certificate", "k33.bip"],
    "certificate_hall4": ["certificate", "hall4.bip"],
    "certificate_star_json": ["--json", "certificate", "star.bip"],
    "assign_star_trace": ["assign", "star.bip", "--trace"],
    "assign_k33_random": ["assign", "k33.bip", "--tie-break", "random", "--seed", "3",
                          "--check-invariants"],
    "assign_tight2": ["assign", "tight2.graph"],
    "verify_bad": ["verify-assign", "k11.bip", "k11_bad.assign"],
    "play_star": ["play", "star.bip", "--p1", "random", "--p2", "assign", "--seed", "4"],
    "play_k11": ["play", "k11.bip", "--p1", "assign", "--p2", "minimax"],
    "play_hall4_json": ["play", "hall4.bip", "--p1", "minimax", "--p2", "random", "--json"],
    "solve_star": ["solve", "star.bip"],
    "solve_hall4": ["solve", "hall4.bip"],
    "bench3": ["bench-tightness", "--n-max", "3"],
    "maxweight_w3": ["maxweight", "w3.wbip"],
    "maxweight_missing": ["maxweight", "missing.wbip"],
    "hyp_balanced_triangle": ["hyp", "balanced", "triangle.hyp"],
    "hyp_balanced_interval": ["hyp", "balanced", "interval.hyp"],
    "hyp_assign_duals": ["hyp", "assign", "duals.hyp"],
    "hyp_assign_interval": ["hyp", "assign", "interval.hyp"],
    "hyp_assign_single_search": ["hyp", "assign", "single.hyp", "--search"],
    "hyp_solve_duals": ["hyp", "solve", "duals.hyp"],
    "hyp_solve_single_json": ["hyp", "solve", "single.hyp", "--json"],
}
