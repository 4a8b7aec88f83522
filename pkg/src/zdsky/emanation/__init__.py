from .counts import (
    BoxKiteCount,
    SkyboxLevel,
    band_of,
    boxkite_count,
    composed_count,
    muntin_split,
    sand_mandala_count,
    singleton_cells,
    singleton_maximal_count,
    skybox_level,
)
from .recipe import RecipePass, RecipeSpec, et_recipe, prepare_recipe, run_recipe
from .table import Cell, EmanationTable, et_bruteforce, label_order
from .verify import (
    CheckReport,
    four_corners_check,
    french_windows_check,
    number_hub_check,
    recipe_vs_bruteforce,
    skybox,
    skybox_embed_check,
)

__all__ = [
    "BoxKiteCount", "SkyboxLevel", "band_of", "boxkite_count", "composed_count", "muntin_split",
    "sand_mandala_count", "singleton_cells", "singleton_maximal_count", "skybox_level",
    "RecipePass", "RecipeSpec", "et_recipe", "prepare_recipe", "run_recipe",
    "Cell", "EmanationTable", "et_bruteforce", "label_order",
    "CheckReport", "four_corners_check", "french_windows_check", "number_hub_check",
    "recipe_vs_bruteforce", "skybox", "skybox_embed_check",
]
