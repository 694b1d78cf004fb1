"""Тесты переписи I-графов: теория чисел, графы, формулы, плотности и командная строка."""
