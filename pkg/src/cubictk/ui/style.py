"""Text styles."""

from rich.theme import Theme

theme = Theme(
    {
        "error": "bright_red bold",
        "failed": "bright_red",
        "passed": "bright_green",
        "secondary": "grey69",
        "value": "light_goldenrod2",
    }
)
