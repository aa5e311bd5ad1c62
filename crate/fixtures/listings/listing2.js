var person = {	firstName:"John",
				lastName:"Doe",
				birthDate: "01-01-2000",
				getAge: function () { return 25; }
			};
