/*
   Copyright 2026 the deutsch-paths authors

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

#ifndef DEUTSCH_DEUTSCH_HPP
#define DEUTSCH_DEUTSCH_HPP

#include "deutsch/asymptotics.hpp"
#include "deutsch/closed_forms.hpp"
#include "deutsch/paths.hpp"
#include "deutsch/rational.hpp"
#include "deutsch/series.hpp"
#include "deutsch/slices.hpp"
#include "deutsch/tpoly.hpp"

#endif  // DEUTSCH_DEUTSCH_HPP
