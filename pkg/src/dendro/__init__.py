"""Finite combinatorics of dendroidal sets.

Trees, faces and horns; nerves of finite operads with exhaustive
Kan-condition checks; shuffle decompositions of tensors with linear trees;
and verification, construction and search of anodyne-extension
certificates.
"""

from .anodyne import (AnodyneClass, BuildError, Certificate, HornStep,
                      NestedStep, SearchResult, VerificationReport, Violation,
                      build_filtration, certificate_class, class_phrase,
                      generator_class, parse_class, search_certificate,
                      verify_certificate)
from .complexes import Cell, Complex, Subcomplex, closure_cells, representable
from .dot import tree_to_dot
from .kan import (HornMap, HornWitness, KanReport, enumerate_horn_maps,
                  fillers, kan_report, tree_shapes)
from .lemmas import (LEMMA_IDS, binary_tensor_certificate, build_lemma_certificate,
                     codim_certificate, extended_corolla_split_certificate,
                     root_horn_certificate, split_vertex_tree)
from .nerves import (Dendrex, check_dendrex, degeneracy_of, dendrex_closure,
                     dendrices, face_of, is_degenerate, underlying_sset)
from .operads import (CORPUS, FiniteOperad, FiniteSMC, SMCOperad, TableOperad,
                      picard_check, table_operad_from, validate_operad,
                      validate_smc)
from .shuffles import (c2_shuffle, c2_tensor_complex, filtration_base,
                       named_cell, shuffles, tensor_complex)
from .trees import (FaceDescriptor, HornSpec, Tree, TreeError, Vertex,
                    build_standard, c2, classify_edges, classify_horn, corolla,
                    eta, extended_corolla, face, faces, graft, has_root_horn,
                    horn, isomorphic, isomorphisms, linear, subtree_from_edges)
