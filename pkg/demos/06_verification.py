"""
Verification suites
===================

The same checks behind ``seqbool verify`` can be run from Python. Each row
names a property, its scope, and a counterexample when it fails.
"""

from seqbool import verify

checks = verify.run("core", seed=1)
print(verify.format_checks(checks[:6]))
print(sum(c.passed for c in checks), "of", len(checks))

checks = verify.run("gss", degrees=range(3, 6))
print(all(c.passed for c in checks))
