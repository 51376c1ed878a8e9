// Copyright 2026 The Unfmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNFMT_ERROR_H_
#define UNFMT_ERROR_H_

#include <stdexcept>
#include <string>

namespace unfmt {

// Fatal error categories. Non-fatal conditions (unterminated constructs,
// mismatched bracket kinds, per-file I/O problems during a corpus walk) are
// reported through result structs instead of exceptions.
enum class ErrorCode {
  kInvalidEncoding,   // input is not valid UTF-8
  kUnbalancedBraces,  // restore called on brace-unbalanced input
  kLedgerMismatch,    // repair-ledger boundary tokens no longer match
  kMissingFile,       // tokenizer vocab/merges file absent
  kMalformedVocab,    // vocab ids are duplicated or not contiguous from 0
  kMalformedMerges,   // merge rule references symbols missing from the vocab
  kEmptyCorpus,       // corpus walk matched no files
  kIoError,           // unreadable input, unwritable output
  kMalformedRequest,  // gateway request lacks prompt/messages
  kUsage,             // bad command line
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unfmt

#endif  // UNFMT_ERROR_H_
