from pydantic_settings import BaseSettings


class StringLinkSettings(BaseSettings):
    app_name: str = "String Link Invariants"
    app_version: str = "1.0.0"
    app_description: str = "Kauffman states, torsion and homology tables for string links"

    output_format: str = "text"
    log_level: str = "INFO"

    seed: int = 1
    max_crossings: int = 8
    max_strands: int = 4
    random_diagrams: int = 100
    random_braids: int = 200
    random_pairs: int = 50
    pair_max_crossings: int = 6

    weight_table_path: str = "data/weights.tsv"
    fixtures_dir: str = "fixtures"
    cofactor_limit: int = 10

    class Config:
        env_file = ".env"
        extra = "allow"


def get_settings() -> StringLinkSettings:
    return StringLinkSettings()
