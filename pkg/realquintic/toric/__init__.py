"""[toric] intersection numbers on the toric 4-fold and the mod-2 triple table."""
