"""
qstack - Settings Configuration
Manejo centralizado de configuración usando Pydantic Settings
"""

import logging
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configuración global del motor de verificación"""

    model_config = SettingsConfigDict(
        env_file='.env', env_file_encoding='utf-8', env_prefix='', case_sensitive=False, extra='ignore'
    )

    # ============================================
    # Application Settings
    # ============================================
    app_name: str = Field(default='qstack')
    app_version: str = Field(default='1.0.0')
    log_level: str = Field(default='INFO')

    # ============================================
    # Rewriting / Completion
    # ============================================
    max_degree: int = Field(
        default=6, description='Grado máximo de reglas añadidas por la completación acotada'
    )
    max_rounds: int = Field(default=4, description='Rondas de completación por consulta')
    max_overlap_length: int = Field(
        default=4, description='Longitud máxima de solapamientos en check_local_confluence'
    )

    # ============================================
    # A-infinity
    # ============================================
    truncation_order: int = Field(
        default=8, description='Número máximo de inserciones de b en m_k^b'
    )
    max_tensor_length: int = Field(default=4, description='Longitud máxima en ainfty_check')
    gluing_max_p: int = Field(
        default=4, description='Cota superior de p para m_p(alpha, ..., alpha) = 0'
    )

    # ============================================
    # Datasets & Reports
    # ============================================
    datasets_dir: Path = Field(default=Path('config/datasets'))
    report_format: str = Field(default='text', description='text | machine')

    # ============================================
    # Property tests
    # ============================================
    random_seed: int = Field(default=20240917)
    property_trials: int = Field(default=100)
    extension_trials: int = Field(default=50)

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        if not isinstance(logging.getLevelName(v.upper()), int):
            raise ValueError(f'Unknown log level: {v}')
        return v.upper()

    @field_validator('report_format')
    @classmethod
    def validate_report_format(cls, v: str) -> str:
        if v not in ('text', 'machine'):
            raise ValueError('report_format must be "text" or "machine"')
        return v

    @field_validator(
        'max_degree',
        'max_rounds',
        'max_overlap_length',
        'truncation_order',
        'max_tensor_length',
        'gluing_max_p',
        'property_trials',
        'extension_trials',
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError('Bounds must be positive integers')
        return v


# Instancia global
settings = Settings()


def get_settings() -> Settings:
    """Dependency para obtener settings"""
    return settings


def reload_settings() -> Settings:
    """Recarga settings desde el entorno (útil para testing)"""
    global settings
    settings = Settings()
    return settings
