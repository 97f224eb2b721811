"""Continued fractions, 2-bridge knots and the epimorphism census."""
