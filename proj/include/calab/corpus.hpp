#pragma once

#include <functional>

#include "calab/dsl.hpp"

namespace calab {

/// One self-contained verification unit: a session text (when the claims are
/// expressible in the input language) and/or a native routine for checks
/// that need complexes or sweeps.
struct CorpusEntry {
    std::string id;
    std::string title;
    std::string session;  // may be empty
    std::function<std::vector<CheckReport>()> native;  // may be empty
};

const std::vector<CorpusEntry>& corpus_entries();

/// Evaluate the selected entries (all when the list is empty); report ids are
/// prefixed with the entry id. Entries may run concurrently (CALAB_THREADS);
/// results are merged in entry order and do not depend on the schedule.
std::vector<CheckReport> run_corpus(const std::vector<std::string>& only = {});

std::string corpus_session_hash();

}  // namespace calab
