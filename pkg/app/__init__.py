"""
pt-spectra: Pöschl–Teller 양자 진동자 스펙트럼·고유함수·열역학 도구
"""

__version__ = "1.0.0"
