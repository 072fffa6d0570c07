from setuptools import setup, find_packages

setup(
    name="altlinkchecker",
    version="1.0.0",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "networkx>=3.1",
        "python-dotenv>=1.0.0",
        "tqdm>=4.66.1",
        "rich>=13.7.0",
    ],
    include_package_data=True,
    package_data={
        "altlinkchecker": ["data/*.dgm", "data/*.map", "data/*.env"],
    },
    entry_points={
        'console_scripts': [
            'altlinkchecker=altlinkchecker.cli:main',
        ],
    },
    author="Marczo",
    description="Hyperbolicity certificates for alternating link diagrams on surfaces.",
    python_requires='>=3.8',
)
