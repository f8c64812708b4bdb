import json
from pathlib import Path
from typing import Any

import yaml


def save_json(data: dict, file_path: Path) -> None:
    """Save a dictionary to a JSON file.

    Args:
        data (dict): The dictionary to save.
        file_path (Path): Path to the file to save the dictionary to.
    """
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=4, ensure_ascii=False)
        f.write("\n")


def read_json(file_path: Path) -> dict:
    """Read a JSON file and return the dictionary.

    Args:
        file_path (Path): Path to the file to read the dictionary from.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        return json.load(f)


def read_yaml(file_path: Path) -> dict[str, Any]:
    """Read a YAML file and return its top-level mapping.

    Args:
        file_path (Path): Path to the YAML file.

    Returns:
        The parsed mapping, empty when the file is empty.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        data = yaml.load(f, Loader=yaml.FullLoader)
    return data or {}
