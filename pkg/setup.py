from pathlib import Path

from setuptools import setup


def dynamic_readme() -> str:
    readme = Path(__file__).parent / "README.md"
    return readme.read_text().replace("> [!NOTE]", "").replace("> [!TIP]", "")


setup(
    long_description=dynamic_readme(),
    long_description_content_type="text/markdown",
)
