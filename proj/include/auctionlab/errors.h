// Copyright 2026 The AuctionLab Authors
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

#ifndef AUCTIONLAB_ERRORS_H_
#define AUCTIONLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace auctionlab {

// An exhaustive routine was asked to enumerate more than its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bid plan produced an action the mechanism cannot execute.
class MalformedPlan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction whose guarantee is asserted at runtime failed that check.
class GuaranteeViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace auctionlab

#endif  // AUCTIONLAB_ERRORS_H_
