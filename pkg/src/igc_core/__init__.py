"""Ядро проекта: конфигурация и логирование."""
