#pragma once

#include <string>
#include <vector>

#include "hermcert/group.hpp"
#include "hermcert/tree.hpp"

namespace hermcert {

/// A backend plus the letter names used to read and print words. Built from
/// the spec mini-grammar:
///   free:R          free group of rank R
///   fpc:m1,m2,...   free product of cyclic groups (0 = infinite factor)
///   cayley:FILE     finite group from a multiplication-table file
///   rws:FILE        confluent rewriting system from a rule file
struct ParsedGroup {
    BackendPtr backend;
    std::string spec;
    std::vector<char> letter_names;  // 1-based generator letters; empty = a, b, c, ...
};

ParsedGroup parse_group_spec(const std::string& spec);

/// Generator words over a..z with ' for inverse ("a,ab,bba"), or "standard"
/// for the canonical symmetric set of the backend.
std::vector<Word> parse_generator_words(const ParsedGroup& group, const std::string& gens);
GeneratingSet parse_generating_set(const ParsedGroup& group, const std::string& gens);

/// Renders a canonical word in the same letters the parser accepts; the
/// identity prints as "1".
std::string word_to_text(const GroupBackend& backend, const Word& w);
std::string word_to_text(const GroupBackend& backend, const Word& w,
                         const std::vector<char>& letter_names);

/// Tree input in the form "degrees=3,4 k=2" (k optional), or a bare degree
/// list "3,4".
TreeSpec parse_tree_spec(const std::string& text);

}  // namespace hermcert
