# Pure helpers: exact polynomials, LaTeX, formatting, files.
