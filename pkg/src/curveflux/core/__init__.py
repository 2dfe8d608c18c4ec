"""
Geometry, estimators, oracle and shared configuration
"""
# Modules here import from models; keep this package free of eager imports
