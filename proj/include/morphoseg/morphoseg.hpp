// Copyright 2026 The morphoseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORPHOSEG_MORPHOSEG_HPP
#define MORPHOSEG_MORPHOSEG_HPP

#include "morphoseg/analysis.hpp"
#include "morphoseg/corpus.hpp"
#include "morphoseg/decoder.hpp"
#include "morphoseg/errors.hpp"
#include "morphoseg/evaluation.hpp"
#include "morphoseg/model.hpp"
#include "morphoseg/segmentation.hpp"
#include "morphoseg/synthgen.hpp"
#include "morphoseg/trainer.hpp"

#endif  // MORPHOSEG_MORPHOSEG_HPP
