"""
pt-spectra 테스트 모음
"""
