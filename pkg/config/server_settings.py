from typing import List
from pydantic_settings import BaseSettings


class ServerSettings(BaseSettings):
    server_host: str = "127.0.0.1"
    server_port: int = 8000
    server_reload: bool = False
    cors_origins: List[str] = ["http://localhost:5173"]

    class Config:
        env_file = ".env"
        extra = "allow"
        case_sensitive = False


def get_server_settings() -> ServerSettings:
    return ServerSettings()
