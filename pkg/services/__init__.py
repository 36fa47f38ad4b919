# Service layer: oracle, quasi-polynomials, scans, golden checks.
