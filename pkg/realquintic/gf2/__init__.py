"""[gf2] dense packed bit matrices over the two-element field."""
