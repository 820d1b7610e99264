"""Exhaustive models of the fibrewise Z2 local systems over GF(2)^n."""
