"""Exact-arithmetic Hochschild/Gerstenhaber structures, symmetric Frobenius
star products, Drinfeld doubles with their SL(2,Z) action, and Verlinde-rule
verification on concrete examples."""

__version__ = "0.1.0"
