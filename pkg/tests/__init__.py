"""
This file is required to allow conftest.py to import 
pycatalyst stuff
"""
