"""
Setup script for hesscoh package.
"""

from setuptools import find_packages, setup

setup(
    name="hesscoh",
    version="0.1.0",
    description="hesscoh - Exact cohomology of flag, Peterson and regular nilpotent Hessenberg varieties",
    author="hesscoh Team",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    python_requires=">=3.9",
    install_requires=[
        "python-dotenv>=1.0.0",
        "pydantic>=2.5",
        "pydantic-settings>=2.1",
        "pandas>=2.0.0",
        "numpy>=1.24.0",
        "sympy>=1.12",
    ],
    extras_require={
        "dev": ["pytest>=7.4", "ruff>=0.5"],
    },
    entry_points={
        "console_scripts": [
            "hesscoh=hesscoh.main:main",
        ],
    },
)
