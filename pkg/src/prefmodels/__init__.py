"""Preferential (minimal-model) semantics for propositional logic."""

from .applications import (
    DefaultRule,
    DefaultTheory,
    ObligationSet,
    compile_defaults,
    default_entails,
    ideal_worlds,
    ought,
)
from .logic import (
    Alphabet,
    Formula,
    classical_entails,
    consequence_set,
    evaluate,
    models_of,
    parse_formula,
    render,
)
from .representation import ViolationWitness, SynthesisReport, check_properties, random_selection, synthesize_structure
from .structures import Copy, PreferentialStructure, SelectionFunction, mu_of_structure, pref_entails, selection_of_structure

__all__ = [
    "Alphabet", "Formula", "parse_formula", "render", "evaluate", "models_of", "classical_entails",
    "consequence_set", "Copy", "PreferentialStructure", "SelectionFunction", "mu_of_structure",
    "selection_of_structure", "pref_entails", "ViolationWitness", "SynthesisReport", "check_properties",
    "synthesize_structure", "random_selection", "DefaultRule", "DefaultTheory", "ObligationSet",
    "compile_defaults", "default_entails", "ideal_worlds", "ought",
]
