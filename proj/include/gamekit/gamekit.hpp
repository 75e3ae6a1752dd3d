// Copyright 2026 The GameKit Authors
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

#ifndef GAMEKIT_GAMEKIT_HPP_
#define GAMEKIT_GAMEKIT_HPP_

#include "gamekit/bimatrix.hpp"
#include "gamekit/common.hpp"
#include "gamekit/game_io.hpp"
#include "gamekit/iterated.hpp"
#include "gamekit/matrix.hpp"
#include "gamekit/nash.hpp"
#include "gamekit/rational.hpp"
#include "gamekit/search.hpp"
#include "gamekit/taxonomy.hpp"
#include "gamekit/text.hpp"
#include "gamekit/tictactoe.hpp"
#include "gamekit/tree.hpp"
#include "gamekit/tree_io.hpp"
#include "gamekit/voting.hpp"
#include "gamekit/voting_io.hpp"
#include "gamekit/zerosum.hpp"

#endif  // GAMEKIT_GAMEKIT_HPP_
