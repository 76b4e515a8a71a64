"""Generalized quantum Stokes operators, their classical limit and polarization-ellipse geometry."""

__version__ = "0.1.0"
