"""
    limbkit: sizing, SEA force control simulation, gait loads, socket stiffness mapping and stress checks for a
    linear-actuated transfemoral prosthesis.
"""
__version__ = "0.1.0"
