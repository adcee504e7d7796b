"""
Services Module

Usage básico:
    from app.services import get_verification_service

    report, code = get_verification_service().run_check('check', loader, ['cocycle'])
"""

from .verification_service import (
    CHECK_KINDS,
    EXIT_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    Bounds,
    VerificationService,
    exit_code,
    get_verification_service,
    init_verification_service,
    reset_verification_service,
)

__all__ = [
    'CHECK_KINDS',
    'EXIT_FAILED',
    'EXIT_INPUT_ERROR',
    'EXIT_OK',
    'Bounds',
    'VerificationService',
    'exit_code',
    'get_verification_service',
    'init_verification_service',
    'reset_verification_service',
]
