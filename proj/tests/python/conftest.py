import os
import sys

# The CMake test target exports where the extension and the package sources
# live; an installed wheel needs neither variable.
for var in ("CODO_PKG_DIR", "CODO_EXT_DIR"):
    path = os.environ.get(var)
    if path and path not in sys.path:
        sys.path.insert(0, path)
