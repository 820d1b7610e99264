"""JSON artifacts, face drawings and the reproduction summary."""
