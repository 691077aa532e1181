"""
Core functionality for pt-spectra (설정, 예외)
"""
