// Copyright 2026 The isingorder Authors
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

#ifndef ISINGORDER_ISINGORDER_HPP
#define ISINGORDER_ISINGORDER_HPP

#include "isingorder/common.hpp"
#include "isingorder/dataio.hpp"
#include "isingorder/encoding.hpp"
#include "isingorder/ensemble.hpp"
#include "isingorder/experiment.hpp"
#include "isingorder/lattice.hpp"
#include "isingorder/ml.hpp"
#include "isingorder/order.hpp"
#include "isingorder/preprocess.hpp"
#include "isingorder/quantum.hpp"

#endif  // ISINGORDER_ISINGORDER_HPP
