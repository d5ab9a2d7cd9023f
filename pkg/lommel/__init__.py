"""
Lommel function numerics and a harness that checks the index-integral
identities built on top of them.
"""
__version__ = '0.1.0'
