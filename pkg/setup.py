from setuptools import setup, find_packages

setup(
    name="discrete_edgeworth",
    version="1.0.0",
    packages=find_packages(include=["discrete_edgeworth*"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.21.0",
        "pandas>=1.5.0",
        "scipy>=1.7.0",
        "scikit-learn>=1.0.0",
        "pydantic>=2.6,<3",
        "python-dotenv>=1.0,<2",
    ],
    entry_points={
        "console_scripts": [
            "discrete-edgeworth=discrete_edgeworth.cli:main",
        ],
    },
    description="Exact law and oscillatory Edgeworth expansion of a self-normalised lattice sum",
)
