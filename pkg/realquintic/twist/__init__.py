"""[twist] squaring pairings, (M-2) twist solving, local validation and Betti calculators."""
