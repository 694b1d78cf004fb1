"""Приёмочные проверки: каждая функция check_* возвращает True при успехе."""
