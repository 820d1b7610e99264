"""[polytope] lattice points of P, facet triangulations and the simplicial fan."""
