/*
   Copyright 2026 the linrel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINREL_LINREL_HPP
#define LINREL_LINREL_HPP

#include "linrel/errors.hpp"
#include "linrel/ast.hpp"
#include "linrel/fields.hpp"
#include "linrel/poly.hpp"
#include "linrel/linalg.hpp"
#include "linrel/ratfun.hpp"
#include "linrel/printing.hpp"
#include "linrel/expr.hpp"
#include "linrel/solver.hpp"
#include "linrel/oracle.hpp"
#include "linrel/normalform.hpp"

#endif  // LINREL_LINREL_HPP
