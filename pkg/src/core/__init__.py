"""Delta Square Verifier Core Package"""
